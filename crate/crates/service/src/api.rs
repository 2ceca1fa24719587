use std::collections::HashMap;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::{header, HeaderMap, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::Json;
use fsp_core::io::{
    emit_decision_table, emit_explanation, parse_document, DecisionTableRecord, DocumentRecord, Format, TableFormat,
};
use fsp_core::{explain, rank, FuzzySoftSet, Measure};
use serde::{Deserialize, Serialize};

use crate::error::ApiError;
use crate::session::{Patch, PatchRecord, SessionStore};

pub type AppState = Arc<SessionStore>;

fn json_bytes(status: StatusCode, bytes: Vec<u8>) -> Response {
    (status, [(header::CONTENT_TYPE, "application/json")], bytes).into_response()
}

fn pretty<T: Serialize>(status: StatusCode, value: &T) -> Response {
    let mut bytes = serde_json::to_vec_pretty(value).expect("response serializes");
    bytes.push(b'\n');
    json_bytes(status, bytes)
}

fn parse_measure(raw: Option<&str>) -> Result<Measure, ApiError> {
    match raw {
        None => Ok(Measure::G1),
        Some(text) => text
            .parse()
            .map_err(|msg: String| ApiError::new(StatusCode::BAD_REQUEST, "BadMeasure", msg)),
    }
}

fn table_for(fss: &FuzzySoftSet, measure: Measure) -> Result<fsp_core::DecisionTable, ApiError> {
    rank(fss, measure).map_err(|e| ApiError::internal(e.to_string()))
}

pub async fn health() -> impl IntoResponse {
    Json(serde_json::json!({ "status": "ok" }))
}

#[derive(Serialize)]
struct Created {
    id: String,
}

/// `POST /sessions` with an assessment document (JSON, or CSV when the
/// content type says so).
pub async fn create_session(
    State(store): State<AppState>,
    headers: HeaderMap,
    body: Bytes,
) -> Result<Response, ApiError> {
    let is_csv = headers
        .get(header::CONTENT_TYPE)
        .and_then(|v| v.to_str().ok())
        .is_some_and(|v| v.contains("csv"));
    let format = if is_csv { Format::Csv } else { Format::Json };
    let doc = parse_document(&body, format)?;
    let id = store.create(doc).map_err(|e| ApiError::internal(e.to_string()))?;
    tracing::info!(session = %id, "session created");
    Ok(pretty(StatusCode::CREATED, &Created { id }))
}

#[derive(Serialize)]
struct SessionView {
    id: String,
    initial: DocumentRecord,
    current: DocumentRecord,
    history: Vec<PatchRecord>,
}

/// `GET /sessions/{id}`: initial document, current state and patch history.
pub async fn get_session(State(store): State<AppState>, Path(id): Path<String>) -> Result<Response, ApiError> {
    let session = store.get(&id).ok_or_else(|| ApiError::unknown_session(&id))?;
    let s = session.lock().expect("session poisoned");
    let view = SessionView {
        id: s.id.clone(),
        initial: DocumentRecord::from(&s.initial),
        current: DocumentRecord::from(&fsp_core::io::AssessmentDocument {
            fss: s.current.clone(),
            metadata: s.initial.metadata.clone(),
        }),
        history: s.history.clone(),
    };
    Ok(pretty(StatusCode::OK, &view))
}

/// `GET /sessions/{id}/rank?measure=g1`
pub async fn rank_session(
    State(store): State<AppState>,
    Path(id): Path<String>,
    Query(query): Query<HashMap<String, String>>,
) -> Result<Response, ApiError> {
    let measure = parse_measure(query.get("measure").map(String::as_str))?;
    let session = store.get(&id).ok_or_else(|| ApiError::unknown_session(&id))?;
    let current = session.lock().expect("session poisoned").current.clone();
    let table = table_for(&current, measure)?;
    Ok(json_bytes(StatusCode::OK, emit_decision_table(&table, TableFormat::Json)))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WhatIfRequest {
    #[serde(default)]
    pub edits: Vec<crate::session::GradeEdit>,
    #[serde(default)]
    pub eliminate: Vec<String>,
    #[serde(default)]
    pub dry_run: bool,
    #[serde(default)]
    pub measure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankDelta {
    pub alternative: String,
    pub before_rank: usize,
    pub after_rank: usize,
    /// positive when the alternative moved towards the top
    pub delta: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhatIfResponse {
    pub measure: String,
    pub applied: bool,
    pub before: DecisionTableRecord,
    pub after: DecisionTableRecord,
    pub deltas: Vec<RankDelta>,
}

/// `POST /sessions/{id}/whatif`
pub async fn whatif(
    State(store): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Response, ApiError> {
    let request: WhatIfRequest = serde_json::from_slice(&body)
        .map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "SyntaxError", e.to_string()))?;
    let measure = parse_measure(request.measure.as_deref())?;
    let session = store.get(&id).ok_or_else(|| ApiError::unknown_session(&id))?;
    let patch = Patch {
        edits: request.edits,
        eliminate: request.eliminate,
    };
    let (before, after) = store
        .apply(&session, patch, request.dry_run)
        .map_err(|e| ApiError::internal(e.to_string()))?
        .map_err(ApiError::patch)?;
    let before = table_for(&before, measure)?;
    let after = table_for(&after, measure)?;
    let deltas = before
        .rows
        .iter()
        .map(|old| {
            let new = after.row(&old.alternative).expect("alternatives are never removed");
            RankDelta {
                alternative: old.alternative.clone(),
                before_rank: old.rank,
                after_rank: new.rank,
                delta: old.rank as i64 - new.rank as i64,
            }
        })
        .collect();
    let response = WhatIfResponse {
        measure: measure.to_string(),
        applied: !request.dry_run,
        before: DecisionTableRecord::from(&before),
        after: DecisionTableRecord::from(&after),
        deltas,
    };
    Ok(pretty(StatusCode::OK, &response))
}

/// `GET /sessions/{id}/explain/{alt}`
pub async fn explain_alternative(
    State(store): State<AppState>,
    Path((id, alt)): Path<(String, String)>,
) -> Result<Response, ApiError> {
    let session = store.get(&id).ok_or_else(|| ApiError::unknown_session(&id))?;
    let current = session.lock().expect("session poisoned").current.clone();
    let report = explain(&current, &alt).map_err(|e| match e {
        fsp_core::FssError::UnknownAlternative(_) => ApiError::new(StatusCode::NOT_FOUND, e.code(), e.to_string()),
        other => ApiError::internal(other.to_string()),
    })?;
    Ok(json_bytes(StatusCode::OK, emit_explanation(&report, TableFormat::Json)))
}
