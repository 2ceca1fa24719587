//! In-memory sessions with optional JSON snapshots on disk.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};
use std::time::{SystemTime, UNIX_EPOCH};

use fsp_core::io::{AssessmentDocument, DocumentRecord};
use fsp_core::{FssError, FuzzySoftSet, Grade};
use serde::{Deserialize, Serialize};

/// One grade change.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradeEdit {
    pub alternative: String,
    pub attribute: String,
    /// decimal text, e.g. "0.35"
    pub grade: String,
}

/// A what-if modification: grade edits, then attribute eliminations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Patch {
    #[serde(default)]
    pub edits: Vec<GradeEdit>,
    #[serde(default)]
    pub eliminate: Vec<String>,
}

impl Patch {
    pub fn is_empty(&self) -> bool {
        self.edits.is_empty() && self.eliminate.is_empty()
    }
}

/// Applies a patch to a fuzzy soft set without touching the original.
pub fn apply_patch(fss: &FuzzySoftSet, patch: &Patch) -> Result<FuzzySoftSet, FssError> {
    let mut next = fss.clone();
    for edit in &patch.edits {
        let grade: Grade = edit.grade.parse()?;
        next = next.with_grade(&edit.alternative, &edit.attribute, grade)?;
    }
    if !patch.eliminate.is_empty() {
        next = next.eliminate_attributes(&patch.eliminate)?;
    }
    Ok(next)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchRecord {
    pub patch: Patch,
    /// milliseconds since the Unix epoch
    pub applied_at_ms: u64,
}

/// Replays `history` against `initial`.
pub fn replay(initial: &FuzzySoftSet, history: &[PatchRecord]) -> Result<FuzzySoftSet, FssError> {
    history.iter().try_fold(initial.clone(), |fss, record| apply_patch(&fss, &record.patch))
}

#[derive(Debug, Clone)]
pub struct Session {
    pub id: String,
    pub initial: AssessmentDocument,
    pub current: FuzzySoftSet,
    pub history: Vec<PatchRecord>,
}

impl Session {
    fn new(id: String, initial: AssessmentDocument) -> Self {
        Session {
            id,
            current: initial.fss.clone(),
            initial,
            history: Vec::new(),
        }
    }

    /// Commits a patch whose result has already been validated.
    fn commit(&mut self, patch: Patch, next: FuzzySoftSet) {
        self.history.push(PatchRecord {
            patch,
            applied_at_ms: now_ms(),
        });
        self.current = next;
    }

    pub fn snapshot(&self) -> SessionSnapshot {
        SessionSnapshot {
            id: self.id.clone(),
            initial: DocumentRecord::from(&self.initial),
            history: self.history.clone(),
        }
    }
}

fn now_ms() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}

/// On-disk and wire form of a session: the current state is derived by replay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionSnapshot {
    pub id: String,
    pub initial: DocumentRecord,
    pub history: Vec<PatchRecord>,
}

#[derive(Debug, thiserror::Error)]
pub enum StoreError {
    #[error("snapshot {path}: {message}")]
    Snapshot { path: PathBuf, message: String },
    #[error("state directory: {0}")]
    Io(#[from] std::io::Error),
}

/// Session registry. Mutations of one session are serialized by its mutex.
#[derive(Debug, Default)]
pub struct SessionStore {
    sessions: RwLock<HashMap<String, Arc<Mutex<Session>>>>,
    next_id: Mutex<u64>,
    state_dir: Option<PathBuf>,
}

impl SessionStore {
    pub fn in_memory() -> Self {
        SessionStore::default()
    }

    /// Opens a store persisted under `dir`, restoring every snapshot found there.
    pub fn persistent(dir: impl Into<PathBuf>) -> Result<Self, StoreError> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir)?;
        let mut sessions = HashMap::new();
        let mut max_id = 0;
        let mut paths: Vec<PathBuf> = std::fs::read_dir(&dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        for path in paths {
            let session = load_snapshot(&path)?;
            if let Some(n) = session.id.strip_prefix('s').and_then(|n| n.parse::<u64>().ok()) {
                max_id = max_id.max(n);
            }
            sessions.insert(session.id.clone(), Arc::new(Mutex::new(session)));
        }
        Ok(SessionStore {
            sessions: RwLock::new(sessions),
            next_id: Mutex::new(max_id),
            state_dir: Some(dir),
        })
    }

    pub fn create(&self, doc: AssessmentDocument) -> Result<String, StoreError> {
        let id = {
            let mut next = self.next_id.lock().expect("id counter poisoned");
            *next += 1;
            format!("s{}", *next)
        };
        let session = Session::new(id.clone(), doc);
        self.persist(&session)?;
        self.sessions
            .write()
            .expect("session map poisoned")
            .insert(id.clone(), Arc::new(Mutex::new(session)));
        Ok(id)
    }

    pub fn get(&self, id: &str) -> Option<Arc<Mutex<Session>>> {
        self.sessions.read().expect("session map poisoned").get(id).cloned()
    }

    /// Validates `patch` against the session's current state and, unless
    /// `dry_run`, commits it. Returns the state before and after.
    pub fn apply(
        &self,
        session: &Mutex<Session>,
        patch: Patch,
        dry_run: bool,
    ) -> Result<Result<(FuzzySoftSet, FuzzySoftSet), FssError>, StoreError> {
        let mut guard = session.lock().expect("session poisoned");
        let before = guard.current.clone();
        let after = match apply_patch(&before, &patch) {
            Ok(next) => next,
            Err(e) => return Ok(Err(e)),
        };
        if !dry_run {
            let mut staged = guard.clone();
            staged.commit(patch, after.clone());
            self.persist(&staged)?;
            *guard = staged;
        }
        Ok(Ok((before, after)))
    }

    fn persist(&self, session: &Session) -> Result<(), StoreError> {
        let Some(dir) = &self.state_dir else {
            return Ok(());
        };
        let path = dir.join(format!("{}.json", session.id));
        let tmp = dir.join(format!(".{}.json.tmp", session.id));
        let bytes = serde_json::to_vec_pretty(&session.snapshot()).expect("snapshot serializes");
        std::fs::write(&tmp, bytes)?;
        std::fs::rename(&tmp, &path)?;
        Ok(())
    }
}

fn load_snapshot(path: &Path) -> Result<Session, StoreError> {
    let err = |message: String| StoreError::Snapshot {
        path: path.to_path_buf(),
        message,
    };
    let bytes = std::fs::read(path)?;
    let snapshot: SessionSnapshot = serde_json::from_slice(&bytes).map_err(|e| err(e.to_string()))?;
    let initial = snapshot.initial.into_document().map_err(|e| err(e.to_string()))?;
    let current = replay(&initial.fss, &snapshot.history).map_err(|e| err(e.to_string()))?;
    Ok(Session {
        id: snapshot.id,
        initial,
        current,
        history: snapshot.history,
    })
}
