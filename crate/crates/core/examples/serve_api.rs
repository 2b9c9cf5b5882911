//! Start the HTTP API on port 8080, or the port given.
//!
//! curl -s localhost:8080/api/grundy -d '{"board":"0110","mode":"fixed","variant":"single"}'

use std::sync::Arc;

use peglab::duotaire::Engine;
use peglab::service::api::{serve, AppState};

#[tokio::main]
async fn main() {
    let port = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8080);
    let state = Arc::new(AppState::new(Engine::new(), None));
    if let Err(e) = serve(port, state).await {
        eprintln!("{e}");
    }
}
