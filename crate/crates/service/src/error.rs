use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use fsp_core::io::IoError;
use fsp_core::FssError;
use serde::Serialize;

#[derive(Debug, Serialize)]
struct ErrorBody {
    error: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    row: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    column: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    line: Option<u64>,
}

/// Error response: status plus a JSON body with a stable `error` code.
#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    body: ErrorBody,
}

impl ApiError {
    pub fn new(status: StatusCode, code: &'static str, message: impl Into<String>) -> Self {
        ApiError {
            status,
            body: ErrorBody {
                error: code,
                message: message.into(),
                row: None,
                column: None,
                line: None,
            },
        }
    }

    pub fn status(&self) -> StatusCode {
        self.status
    }

    pub fn unknown_session(id: &str) -> Self {
        ApiError::new(StatusCode::NOT_FOUND, "UnknownSession", format!("no session {id:?}"))
    }

    pub fn internal(message: impl Into<String>) -> Self {
        ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "Internal", message)
    }

    /// Validation failure of a patch or query against an existing session.
    pub fn patch(err: FssError) -> Self {
        let status = match err {
            FssError::EmptyAttributeSet => StatusCode::CONFLICT,
            _ => StatusCode::BAD_REQUEST,
        };
        ApiError::new(status, err.code(), err.to_string())
    }
}

impl From<IoError> for ApiError {
    fn from(err: IoError) -> Self {
        let location = err.location().clone();
        let mut api = ApiError::new(StatusCode::BAD_REQUEST, err.code(), err.to_string());
        api.body.row = location.row;
        api.body.column = location.column;
        api.body.line = location.line;
        api
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}
