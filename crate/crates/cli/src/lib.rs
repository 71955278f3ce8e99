//! File formats, renderers and the command-line driver for `linf-snake`.

mod app;
pub mod formats;
pub mod render;

pub use app::{run, run_with};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] linf_snake::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Format(String),
}
