use thiserror::Error;

use crate::bias::BiasError;
use crate::counting::CountError;
use crate::field::FieldError;
use crate::pencil::PencilError;
use crate::polyalg::PolyError;

/// Crate-level error, wrapping the per-module error types.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Pencil(#[from] PencilError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Bias(#[from] BiasError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
