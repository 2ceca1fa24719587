//! HTTP API over fuzzy soft set sessions.
//!
//! | method | path | |
//! |---|---|---|
//! | GET | `/health` | liveness |
//! | POST | `/sessions` | create from an assessment document (JSON, or CSV with a `text/csv` content type) |
//! | GET | `/sessions/{id}` | initial document, current state, patch history |
//! | GET | `/sessions/{id}/rank?measure=g1` | decision table |
//! | POST | `/sessions/{id}/whatif` | apply or preview grade edits / attribute eliminations |
//! | GET | `/sessions/{id}/explain/{alt}` | comparison sets and measures of one alternative |

pub mod api;
pub mod error;
pub mod session;

use std::future::Future;
use std::path::PathBuf;
use std::sync::Arc;

use axum::http::HeaderValue;
use axum::routing::{get, post};
use axum::Router;
use tokio::net::TcpListener;
use tower_http::cors::{AllowOrigin, Any, CorsLayer};

pub use api::{RankDelta, WhatIfResponse};
pub use error::ApiError;
pub use session::{apply_patch, replay, GradeEdit, Patch, PatchRecord, SessionSnapshot, SessionStore, StoreError};

#[derive(Debug, Clone, Default)]
pub struct ServiceConfig {
    /// snapshot directory; sessions stay in memory only when unset
    pub state_dir: Option<PathBuf>,
    /// allowed CORS origin; any origin when unset
    pub cors_origin: Option<String>,
}

pub fn router(store: Arc<SessionStore>, cors_origin: Option<&str>) -> Router {
    let origin = match cors_origin.and_then(|o| HeaderValue::from_str(o).ok()) {
        Some(value) => AllowOrigin::exact(value),
        None => AllowOrigin::from(Any),
    };
    let cors = CorsLayer::new().allow_origin(origin).allow_methods(Any).allow_headers(Any);
    Router::new()
        .route("/health", get(api::health))
        .route("/sessions", post(api::create_session))
        .route("/sessions/{id}", get(api::get_session))
        .route("/sessions/{id}/rank", get(api::rank_session))
        .route("/sessions/{id}/whatif", post(api::whatif))
        .route("/sessions/{id}/explain/{alt}", get(api::explain_alternative))
        .layer(cors)
        .with_state(store)
}

/// Builds the router described by `config`, restoring snapshots if any.
pub fn app(config: &ServiceConfig) -> Result<Router, StoreError> {
    let store = match &config.state_dir {
        Some(dir) => SessionStore::persistent(dir)?,
        None => SessionStore::in_memory(),
    };
    Ok(router(Arc::new(store), config.cors_origin.as_deref()))
}

/// Serves until `shutdown` resolves.
pub async fn serve(
    listener: TcpListener,
    app: Router,
    shutdown: impl Future<Output = ()> + Send + 'static,
) -> std::io::Result<()> {
    axum::serve(listener, app).with_graceful_shutdown(shutdown).await
}
