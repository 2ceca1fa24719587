use std::io::Read;
use std::path::{Path, PathBuf};

use fsp_core::io::{emit_decision_table, emit_explanation, parse_assessment, Format, TableFormat};
use fsp_core::simulate::{emit_report, run_simulation, ReportFormat, SimulationConfig};
use fsp_core::{FssError, FuzzySoftSet, Measure};

use crate::error::CliError;

/// Directory searched for relative inputs missing from the working directory.
pub const FIXTURE_DIR_ENV: &str = "FSP_FIXTURE_DIR";

fn resolve(input: &str) -> PathBuf {
    let path = PathBuf::from(input);
    if path.is_relative() && !path.exists() {
        if let Some(dir) = std::env::var_os(FIXTURE_DIR_ENV) {
            let candidate = Path::new(&dir).join(&path);
            if candidate.exists() {
                return candidate;
            }
        }
    }
    path
}

fn load(input: &str, input_format: Option<&str>) -> Result<FuzzySoftSet, CliError> {
    let (path, bytes) = if input == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(|source| CliError::Read {
            path: PathBuf::from("<stdin>"),
            source,
        })?;
        (PathBuf::from("<stdin>"), buf)
    } else {
        let path = resolve(input);
        let bytes = std::fs::read(&path).map_err(|source| CliError::Read {
            path: path.clone(),
            source,
        })?;
        (path, bytes)
    };
    let format = match input_format {
        Some(f) => f.parse().map_err(CliError::Usage)?,
        None => Format::from_path(input),
    };
    parse_assessment(&bytes, format).map_err(|e| CliError::Parse { path, source: Box::new(e) })
}

fn table_format(text: &str) -> Result<TableFormat, CliError> {
    text.parse().map_err(CliError::Usage)
}

fn unknown(e: FssError) -> CliError {
    match e {
        FssError::UnknownAlternative(_) | FssError::UnknownAttribute(_) => CliError::Unknown(e),
        FssError::EmptyAttributeSet => CliError::Usage(e.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}

pub struct RankRequest {
    pub input: String,
    pub input_format: Option<String>,
    pub measure: String,
    pub format: String,
    pub keep: Vec<String>,
    pub eliminate: Vec<String>,
}

pub fn rank(req: &RankRequest) -> Result<Vec<u8>, CliError> {
    let measure: Measure = req.measure.parse().map_err(CliError::Usage)?;
    let format = table_format(&req.format)?;
    let mut fss = load(&req.input, req.input_format.as_deref())?;
    if !req.keep.is_empty() {
        fss = fss.restrict_attributes(&req.keep).map_err(unknown)?;
    }
    if !req.eliminate.is_empty() {
        fss = fss.eliminate_attributes(&req.eliminate).map_err(unknown)?;
    }
    let table = fsp_core::rank(&fss, measure).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(emit_decision_table(&table, format))
}

pub fn explain(input: &str, input_format: Option<&str>, alternative: &str, format: &str) -> Result<Vec<u8>, CliError> {
    let format = table_format(format)?;
    let fss = load(input, input_format)?;
    let report = fsp_core::explain(&fss, alternative).map_err(unknown)?;
    Ok(emit_explanation(&report, format))
}

pub struct SimulateRequest {
    pub config: Option<PathBuf>,
    pub scenarios: Option<u64>,
    pub alternatives: Option<usize>,
    pub attributes: Option<usize>,
    pub grid_step: Option<String>,
    pub seed: Option<u64>,
    pub measures: Vec<String>,
    pub format: String,
}

pub fn simulate(req: &SimulateRequest) -> Result<Vec<u8>, CliError> {
    let format: ReportFormat = req.format.parse().map_err(CliError::Usage)?;
    let mut config = match &req.config {
        Some(path) => {
            let bytes = std::fs::read(path).map_err(|source| CliError::Read {
                path: path.clone(),
                source,
            })?;
            serde_json::from_slice::<SimulationConfig>(&bytes)
                .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?
        }
        None => SimulationConfig::new(1000, 10, 20, 0),
    };
    if let Some(v) = req.scenarios {
        config.scenarios = v;
    }
    if let Some(v) = req.alternatives {
        config.n_alternatives = v;
    }
    if let Some(v) = req.attributes {
        config.n_attributes = v;
    }
    if let Some(v) = &req.grid_step {
        config.grid_step = v
            .parse()
            .map_err(|e: FssError| CliError::Config(format!("grid step: {e}")))?;
    }
    if let Some(v) = req.seed {
        config.seed = v;
    }
    if !req.measures.is_empty() {
        config.measures = req
            .measures
            .iter()
            .map(|m| m.parse().map_err(CliError::Config))
            .collect::<Result<_, _>>()?;
    }
    let report = run_simulation(&config).map_err(|e| CliError::Config(e.to_string()))?;
    Ok(emit_report(&report, format))
}

pub fn serve(host: &str, port: u16, state_dir: Option<PathBuf>, cors_origin: Option<String>) -> Result<(), CliError> {
    let _ = tracing_subscriber::fmt()
        .with_env_filter(
            tracing_subscriber::EnvFilter::try_from_default_env()
                .unwrap_or_else(|_| tracing_subscriber::EnvFilter::new("info")),
        )
        .with_writer(std::io::stderr)
        .try_init();
    let runtime = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    runtime.block_on(async move {
        let addr = format!("{host}:{port}");
        let listener = tokio::net::TcpListener::bind(&addr)
            .await
            .map_err(|source| CliError::Bind {
                addr: addr.clone(),
                source,
            })?;
        let app = fsp_service::app(&fsp_service::ServiceConfig { state_dir, cors_origin })
            .map_err(|e| CliError::Internal(e.to_string()))?;
        let local = listener.local_addr().map_err(|e| CliError::Internal(e.to_string()))?;
        eprintln!("listening on http://{local}");
        fsp_service::serve(listener, app, async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
        .map_err(|e| CliError::Internal(e.to_string()))
    })
}
