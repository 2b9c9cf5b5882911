use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use peglab::duotaire::Engine;
use peglab::service::api::{router, AppState};
use peglab::{BoardMode, Position, Variant};
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(state: &Arc<AppState>, method: &str, path: &str, body: Option<&str>) -> (StatusCode, Value) {
    let req = Request::builder()
        .method(method)
        .uri(path)
        .header("content-type", "application/json")
        .body(body.map(|b| Body::from(b.to_string())).unwrap_or_else(Body::empty))
        .unwrap();
    let resp = router(state.clone()).oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, serde_json::from_slice(&bytes).unwrap())
}

fn state() -> Arc<AppState> {
    Arc::new(AppState::new(Engine::new(), None))
}

#[tokio::test]
async fn health() {
    assert_eq!(call(&state(), "GET", "/api/health", None).await, (StatusCode::OK, json!({"ok": true})));
}

#[tokio::test]
async fn grundy_matches_the_engine() {
    let s = state();
    let (status, body) =
        call(&s, "POST", "/api/grundy", Some(r#"{"board":"0110","variant":"single","mode":"fixed"}"#)).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body, json!({"grundy": 1, "isP": false}));

    for (board, variant, mode) in [("10110100101011", "multi", "fixed"), ("1111", "multi", "open"), ("11011", "single", "open")] {
        let req = json!({"board": board, "variant": variant, "mode": mode}).to_string();
        let (_, body) = call(&s, "POST", "/api/grundy", Some(&req)).await;
        let v: Variant = serde_json::from_value(json!(variant)).unwrap();
        let m: BoardMode = serde_json::from_value(json!(mode)).unwrap();
        let direct = Engine::new().grundy(&Position::parse(board, m).unwrap(), v).unwrap();
        assert_eq!(body["grundy"], json!(direct.get()));
        assert_eq!(body["isP"], json!(direct.is_zero()));
    }
}

#[tokio::test]
async fn solve_reports_min_pegs() {
    let (status, body) = call(&state(), "POST", "/api/solve", Some(r#"{"board":"11"}"#)).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["solvable"], json!(false));
    assert_eq!(body["minPegs"], json!(2));

    let (_, body) = call(&state(), "POST", "/api/solve", Some(r#"{"board":"1011"}"#)).await;
    assert_eq!(body["solvable"], json!(true));
    assert_eq!(body["minPegs"], json!(1));
    let moves = body["moves"].as_array().unwrap();
    assert_eq!(moves.len(), 2);
    assert_eq!(moves.last().unwrap()["resultBoard"], json!("0010"));
    assert_eq!(body["segments"], json!([[0, 4]]));
}

#[tokio::test]
async fn options_replay() {
    let board = "0110110";
    let req = json!({"board": board, "variant": "multi", "mode": "fixed"}).to_string();
    let (status, body) = call(&state(), "POST", "/api/options", Some(&req)).await;
    assert_eq!(status, StatusCode::OK);
    let p = Position::parse(board, BoardMode::Fixed).unwrap();
    let options = body["options"].as_array().unwrap();
    assert_eq!(options.len(), p.multihop_options().len());
    for o in options {
        let hops: Vec<peglab::Hop> = serde_json::from_value(o["move"]["hops"].clone()).unwrap();
        let m = peglab::Move { hops, variant: Variant::MultiHop };
        let q = p.apply(&m).unwrap();
        assert_eq!(o["resultBoard"], json!(q.render()));
        assert_eq!(o["grundy"], json!(Engine::new().grundy(&q, Variant::MultiHop).unwrap().get()));
    }
}

#[tokio::test]
async fn open_results_widen_to_the_left() {
    let req = json!({"board": "11", "variant": "single", "mode": "open"}).to_string();
    let (status, body) = call(&state(), "POST", "/api/best", Some(&req)).await;
    assert_eq!(status, StatusCode::OK);
    let mut moves: Vec<(String, i64)> = body["moves"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| (m["resultBoard"].as_str().unwrap().to_string(), m["offsetDelta"].as_i64().unwrap()))
        .collect();
    moves.sort();
    assert_eq!(moves, vec![("001".to_string(), 0), ("100".to_string(), 1)]);
}

#[tokio::test]
async fn best_on_a_p_position_conflicts() {
    let req = json!({"board": "1111", "variant": "multi", "mode": "open"}).to_string();
    let (status, body) = call(&state(), "POST", "/api/best", Some(&req)).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(body, json!({"error": "no winning move"}));
}

#[tokio::test]
async fn malformed_bodies_are_rejected() {
    let s = state();
    for (path, body) in [
        ("/api/grundy", "not json"),
        ("/api/grundy", r#"{"board":"0110"}"#),
        ("/api/grundy", r#"{"board":"01a0","variant":"single","mode":"fixed"}"#),
        ("/api/grundy", r#"{"board":"0110","variant":"triple","mode":"fixed"}"#),
        ("/api/solve", r#"{"board":"000"}"#),
        ("/api/solve", ""),
    ] {
        let (status, body) = call(&s, "POST", path, Some(body)).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{path} {body}");
        assert!(body["error"].is_string());
    }
}

#[tokio::test]
async fn cache_is_written_after_requests() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("values.txt");
    let s = Arc::new(AppState::new(Engine::new(), Some(path.clone())));
    let req = json!({"board": "0110", "variant": "single", "mode": "fixed"}).to_string();
    call(&s, "POST", "/api/grundy", Some(&req)).await;
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().any(|l| l == "s|f|0110|1"), "{text}");
}
