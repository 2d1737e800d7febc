//! Finite Kripke models, poison configurations and model generation.

mod config;
mod enumerate;
mod io;
mod model;
mod stateset;

pub use config::Configuration;
pub use enumerate::{
    enumerate_models, model_spaces, random_model, GenMode, ModelGenSpec, ModelSpace, ModelStream, DEFAULT_MODEL_BUDGET,
};
pub use io::{load_model, save_model};
pub use model::KripkeModel;
pub use stateset::{ModalIndex, StateId, StateSet, StateSetIter, MAX_STATES};
