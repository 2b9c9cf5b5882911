//! JSON over HTTP.
//!
//! Boards on the wire are fixed-coordinate texts: request cell `i` is line
//! coordinate `i` in either mode. Open-mode results that grow past the left
//! edge of the request carry an `offsetDelta` giving how many cells were
//! prepended.

use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use axum::body::Bytes;
use axum::extract::State;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::board::{BoardMode, Hop, Move, Position, Variant};
use crate::duotaire::{Engine, EngineError};
use crate::solver::{is_solvable, min_pegs, SolverError};

use super::cache;

pub struct AppState {
    pub engine: Engine,
    cache_path: Option<PathBuf>,
    // serializes cache writes; holds the memo size at the last store
    stored: Mutex<usize>,
}

impl AppState {
    pub fn new(engine: Engine, cache_path: Option<PathBuf>) -> Self {
        let stored = Mutex::new(engine.memo().len());
        AppState { engine, cache_path, stored }
    }

    /// Rewrites the cache file if the memo has grown since the last write.
    pub fn persist(&self) -> Result<(), cache::CacheError> {
        let Some(path) = &self.cache_path else { return Ok(()) };
        let mut stored = self.stored.lock().unwrap_or_else(|e| e.into_inner());
        let len = self.engine.memo().len();
        if len != *stored {
            cache::persist(path, self.engine.memo())?;
            *stored = len;
        }
        Ok(())
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SolveRequest {
    board: String,
    #[serde(default = "fixed_mode")]
    mode: BoardMode,
}

fn fixed_mode() -> BoardMode {
    BoardMode::Fixed
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GameRequest {
    board: String,
    variant: Variant,
    mode: BoardMode,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ApiMoveRecord {
    pub hops: Vec<Hop>,
    pub result_board: String,
    pub offset_delta: i64,
}

impl ApiMoveRecord {
    /// Describes `m` leading to `result`, rendered over the request board
    /// of `width` cells widened to cover every peg.
    fn new(m: &Move, result: &Position, width: usize) -> Self {
        let (lo, hi) = window(result, width);
        ApiMoveRecord { hops: m.hops.clone(), result_board: result.render_window(lo, hi), offset_delta: -lo }
    }
}

fn window(p: &Position, width: usize) -> (i64, i64) {
    let mut lo = 0;
    let mut hi = width as i64;
    if p.peg_count() > 0 {
        lo = lo.min(p.origin());
        hi = hi.max(p.origin() + p.len() as i64);
    }
    (lo, hi)
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct ApiOption {
    #[serde(rename = "move")]
    mv: ApiMoveRecord,
    result_board: String,
    offset_delta: i64,
    grundy: u32,
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn bad_request(message: impl ToString) -> Self {
        ApiError { status: StatusCode::BAD_REQUEST, message: message.to_string() }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({ "error": self.message }))).into_response()
    }
}

impl From<EngineError> for ApiError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::NoWinningMove => ApiError { status: StatusCode::CONFLICT, message: e.to_string() },
            EngineError::TooWide { .. } => ApiError::bad_request(e),
        }
    }
}

fn decode<T: DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::bad_request(format!("malformed request: {e}")))
}

fn position(board: &str, mode: BoardMode) -> Result<Position, ApiError> {
    let cells = crate::board::parse_cells(board).map_err(ApiError::bad_request)?;
    Ok(match mode {
        BoardMode::Fixed => Position::fixed(cells),
        // request cell i sits at line coordinate i
        BoardMode::Open => Position::open(cells, 0),
    })
}

async fn blocking<T: Send + 'static>(f: impl FnOnce() -> Result<T, ApiError> + Send + 'static) -> Result<T, ApiError> {
    tokio::task::spawn_blocking(f).await.map_err(|e| ApiError {
        status: StatusCode::INTERNAL_SERVER_ERROR,
        message: format!("worker failed: {e}"),
    })?
}

async fn health() -> Json<serde_json::Value> {
    Json(json!({ "ok": true }))
}

async fn solve(body: Bytes) -> Result<Json<serde_json::Value>, ApiError> {
    let req: SolveRequest = decode(&body)?;
    let p = position(&req.board, req.mode)?;
    let width = req.board.len();
    blocking(move || {
        let (k, plan) = min_pegs(&p).map_err(|e| match e {
            SolverError::NoPegs => ApiError::bad_request("board has no pegs"),
            other => ApiError::bad_request(other),
        })?;
        let mut cur = p.clone();
        let mut moves = Vec::with_capacity(plan.moves.len());
        for m in &plan.moves {
            cur = cur.apply(m).expect("plans replay");
            moves.push(ApiMoveRecord::new(m, &cur, width));
        }
        Ok(Json(json!({
            "solvable": is_solvable(&p),
            "minPegs": k,
            "segments": plan.segments,
            "moves": moves,
        })))
    })
    .await
}

async fn grundy(State(state): State<Arc<AppState>>, body: Bytes) -> Result<Json<serde_json::Value>, ApiError> {
    let req: GameRequest = decode(&body)?;
    let p = position(&req.board, req.mode)?;
    blocking(move || {
        let g = state.engine.grundy(&p, req.variant)?;
        persist_quietly(&state);
        Ok(Json(json!({ "grundy": g.get(), "isP": g.is_zero() })))
    })
    .await
}

async fn options(State(state): State<Arc<AppState>>, body: Bytes) -> Result<Json<serde_json::Value>, ApiError> {
    let req: GameRequest = decode(&body)?;
    let p = position(&req.board, req.mode)?;
    let width = req.board.len();
    blocking(move || {
        let options: Vec<ApiOption> = state
            .engine
            .options(&p, req.variant)?
            .into_iter()
            .map(|(m, q, g)| {
                let mv = ApiMoveRecord::new(&m, &q, width);
                ApiOption { result_board: mv.result_board.clone(), offset_delta: mv.offset_delta, mv, grundy: g.get() }
            })
            .collect();
        persist_quietly(&state);
        Ok(Json(json!({ "options": options })))
    })
    .await
}

async fn best(State(state): State<Arc<AppState>>, body: Bytes) -> Result<Json<serde_json::Value>, ApiError> {
    let req: GameRequest = decode(&body)?;
    let p = position(&req.board, req.mode)?;
    let width = req.board.len();
    blocking(move || {
        let moves = state.engine.best_moves(&p, req.variant);
        persist_quietly(&state);
        let records: Vec<ApiMoveRecord> = moves?
            .iter()
            .map(|m| ApiMoveRecord::new(m, &p.apply(m).expect("generated moves are legal"), width))
            .collect();
        Ok(Json(json!({ "moves": records })))
    })
    .await
}

fn persist_quietly(state: &AppState) {
    if let Err(e) = state.persist() {
        tracing::warn!("cache write failed: {e}");
    }
}

pub fn router(state: Arc<AppState>) -> Router {
    Router::new()
        .route("/api/health", get(health))
        .route("/api/solve", post(solve))
        .route("/api/grundy", post(grundy))
        .route("/api/options", post(options))
        .route("/api/best", post(best))
        .with_state(state)
}

/// Serves the API until interrupted, then writes the cache one last time.
pub async fn serve(port: u16, state: Arc<AppState>) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("0.0.0.0", port)).await?;
    tracing::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(state.clone()))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    state.persist().map_err(std::io::Error::other)
}
