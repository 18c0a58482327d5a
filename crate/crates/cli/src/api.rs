//! HTTP session API.
//!
//! A session holds a system and a growing trace. Every successful attach or
//! undo bumps the session revision; an attach carrying a stale `ifRevision`
//! is refused with 409.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{delete, get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use tilework::io::{
    self, AssemblyDocument, MovieDocument, PlacementDoc, SystemDocument, TraceDocument, WindowDoc,
};
use tilework::{
    attach, constrained_regions, extract_movie, frontier, run_trace, splice, Assembly,
    AssemblyTrace, SpliceMode, SpliceOptions, TileSystem,
};

struct Session {
    system: TileSystem,
    trace: AssemblyTrace,
    assembly: Assembly,
    revision: u64,
}

#[derive(Default)]
struct Sessions {
    next_id: u64,
    map: HashMap<String, Session>,
}

type Shared = Arc<Mutex<Sessions>>;

struct ApiError(StatusCode, Value);

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(self.1)).into_response()
    }
}

fn err(status: StatusCode, kind: &str, message: impl ToString) -> ApiError {
    ApiError(
        status,
        json!({"error": kind, "message": message.to_string()}),
    )
}

fn not_found(id: &str) -> ApiError {
    err(
        StatusCode::NOT_FOUND,
        "NoSuchSession",
        format!("no session {id:?}"),
    )
}

fn body<T: DeserializeOwned>(bytes: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(bytes).map_err(|e| err(StatusCode::BAD_REQUEST, "ParseError", e))
}

fn io_error(e: io::IoError) -> ApiError {
    err(StatusCode::UNPROCESSABLE_ENTITY, e.kind(), e)
}

type ApiResult = Result<Json<Value>, ApiError>;

pub fn router() -> Router {
    Router::new()
        .route("/sessions", post(create))
        .route("/sessions/{id}", delete(remove))
        .route("/sessions/{id}/assembly", get(get_assembly))
        .route("/sessions/{id}/frontier", get(get_frontier))
        .route("/sessions/{id}/constrained", get(get_constrained))
        .route("/sessions/{id}/trace", get(get_trace))
        .route("/sessions/{id}/attach", post(post_attach))
        .route("/sessions/{id}/undo", post(post_undo))
        .route("/sessions/{id}/movie", post(post_movie))
        .route("/sessions/{id}/splice-preview", post(post_splice_preview))
        .with_state(Shared::default())
}

pub async fn serve(port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
    axum::serve(listener, router()).await
}

fn with_session<R>(
    state: &Shared,
    id: &str,
    f: impl FnOnce(&mut Session) -> Result<R, ApiError>,
) -> Result<R, ApiError> {
    let mut guard = state.lock().expect("session lock poisoned");
    let s = guard.map.get_mut(id).ok_or_else(|| not_found(id))?;
    f(s)
}

fn assembly_value(s: &Session) -> Value {
    json!({
        "revision": s.revision,
        "assembly": AssemblyDocument::from_assembly(&s.assembly, &s.system.tiles),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CreateRequest {
    system: SystemDocument,
}

async fn create(
    State(state): State<Shared>,
    bytes: Bytes,
) -> Result<(StatusCode, Json<Value>), ApiError> {
    let req: CreateRequest = body(&bytes)?;
    let system = req.system.to_system().map_err(io_error)?;
    let assembly = system.seed.clone();
    let mut guard = state.lock().expect("session lock poisoned");
    guard.next_id += 1;
    let id = format!("s{}", guard.next_id);
    guard.map.insert(
        id.clone(),
        Session {
            system,
            trace: AssemblyTrace::default(),
            assembly,
            revision: 0,
        },
    );
    Ok((StatusCode::CREATED, Json(json!({"id": id, "revision": 0}))))
}

async fn remove(
    State(state): State<Shared>,
    Path(id): Path<String>,
) -> Result<StatusCode, ApiError> {
    let mut guard = state.lock().expect("session lock poisoned");
    guard
        .map
        .remove(&id)
        .map(|_| StatusCode::NO_CONTENT)
        .ok_or_else(|| not_found(&id))
}

async fn get_assembly(State(state): State<Shared>, Path(id): Path<String>) -> ApiResult {
    with_session(&state, &id, |s| Ok(Json(assembly_value(s))))
}

async fn get_frontier(State(state): State<Shared>, Path(id): Path<String>) -> ApiResult {
    with_session(&state, &id, |s| {
        let f: Vec<PlacementDoc> = frontier(&s.assembly, &s.system)
            .into_iter()
            .map(|p| io::placement_doc(p, &s.system.tiles))
            .collect();
        Ok(Json(
            json!({"revision": s.revision, "terminal": f.is_empty(), "frontier": f}),
        ))
    })
}

async fn get_constrained(State(state): State<Shared>, Path(id): Path<String>) -> ApiResult {
    with_session(&state, &id, |s| {
        let dim = s.system.dim();
        let regions: Vec<Vec<Vec<i32>>> = constrained_regions(&s.assembly)
            .into_iter()
            .map(|r| r.into_iter().map(|p| io::pos_to_vec(p, dim)).collect())
            .collect();
        Ok(Json(json!({"revision": s.revision, "regions": regions})))
    })
}

async fn get_trace(State(state): State<Shared>, Path(id): Path<String>) -> ApiResult {
    with_session(&state, &id, |s| {
        let doc = TraceDocument::inline(&s.system, &s.trace, None);
        Ok(Json(json!({"revision": s.revision, "trace": doc})))
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
struct AttachRequest {
    placement: PlacementDoc,
    if_revision: Option<u64>,
}

async fn post_attach(
    State(state): State<Shared>,
    Path(id): Path<String>,
    bytes: Bytes,
) -> ApiResult {
    let req: AttachRequest = body(&bytes)?;
    with_session(&state, &id, |s| {
        if let Some(r) = req.if_revision {
            if r != s.revision {
                return Err(ApiError(
                    StatusCode::CONFLICT,
                    json!({"error": "StaleRevision", "revision": s.revision}),
                ));
            }
        }
        let p = io::placement_from_doc(&req.placement, &s.system.tiles).map_err(io_error)?;
        let next = attach(&s.assembly, p, &s.system)
            .map_err(|e| err(StatusCode::UNPROCESSABLE_ENTITY, e.kind(), e))?;
        s.assembly = next;
        s.trace.push(p);
        s.revision += 1;
        Ok(Json(assembly_value(s)))
    })
}

async fn post_undo(State(state): State<Shared>, Path(id): Path<String>) -> ApiResult {
    with_session(&state, &id, |s| {
        if s.trace.placements.pop().is_none() {
            return Err(err(
                StatusCode::UNPROCESSABLE_ENTITY,
                "NothingToUndo",
                "the trace is empty",
            ));
        }
        s.assembly = run_trace(&s.system, &s.trace).expect("a prefix of a valid trace replays");
        s.revision += 1;
        Ok(Json(assembly_value(s)))
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MovieRequest {
    window: WindowDoc,
}

async fn post_movie(
    State(state): State<Shared>,
    Path(id): Path<String>,
    bytes: Bytes,
) -> ApiResult {
    let req: MovieRequest = body(&bytes)?;
    with_session(&state, &id, |s| {
        let dim = s.system.dim();
        let w = req.window.to_window(dim).map_err(io_error)?;
        let m = extract_movie(&s.system, &s.trace, &w)
            .map_err(|e| err(StatusCode::UNPROCESSABLE_ENTITY, "InvalidWindow", e))?;
        Ok(Json(
            json!({"revision": s.revision, "movie": MovieDocument::from_movie(&m, dim)}),
        ))
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
struct SplicePreviewRequest {
    /// Placements of the second trace, over the session's system.
    trace_b: Vec<PlacementDoc>,
    window: WindowDoc,
    c: Vec<i32>,
    #[serde(default)]
    mode: Option<String>,
}

async fn post_splice_preview(
    State(state): State<Shared>,
    Path(id): Path<String>,
    bytes: Bytes,
) -> ApiResult {
    let req: SplicePreviewRequest = body(&bytes)?;
    with_session(&state, &id, |s| {
        let dim = s.system.dim();
        let w = req.window.to_window(dim).map_err(io_error)?;
        let c = io::vec_to_pos(&req.c, dim).map_err(io_error)?;
        let mode = match req.mode.as_deref() {
            None | Some("full") => SpliceMode::Full,
            Some("bond-forming") => SpliceMode::BondForming,
            Some(other) => {
                return Err(err(
                    StatusCode::BAD_REQUEST,
                    "ParseError",
                    format!("unknown mode {other:?}"),
                ))
            }
        };
        let tb = AssemblyTrace::new(
            req.trace_b
                .iter()
                .map(|p| io::placement_from_doc(p, &s.system.tiles))
                .collect::<Result<_, _>>()
                .map_err(io_error)?,
        );
        let r = splice(&s.system, &s.trace, &tb, &w, c, SpliceOptions::mode(mode))
            .map_err(|e| err(StatusCode::UNPROCESSABLE_ENTITY, e.kind(), e))?;
        Ok(Json(json!({
            "trace": r.trace.placements.iter().map(|&p| io::placement_doc(p, &s.system.tiles)).collect::<Vec<_>>(),
            "assembly": AssemblyDocument::from_assembly(&r.assembly, &s.system.tiles),
        })))
    })
}
