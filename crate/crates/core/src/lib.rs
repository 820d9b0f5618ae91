//! Bruhat inversions, root and brick sequences, and Jordan-Hölder checks for
//! simply-laced Weyl groups.
//!
//! Roots are integer vectors over the simple-root basis and group elements
//! are stored by their images of the simple roots. Type A has its own
//! permutation-level toolkit in [`typea`] with thin representations of the
//! preprojective algebra in [`quiverrep`].

pub mod bruhat;
pub mod error;
pub mod linalg;
pub mod quiverrep;
pub mod roots;
pub mod sortable;
pub mod typea;
pub mod verify;
pub mod weyl;

pub use bruhat::{BinvMethod, BrickFlag, BrickSequence, JhpReport};
pub use error::{Error, Result};
pub use quiverrep::{HomSpace, ThinRep};
pub use roots::{DiagramSpec, DynkinDiagram, Preset, Root, RootSystem};
pub use sortable::{Orientation, OrientationSpec, SortingWord};
pub use typea::Permutation;
pub use weyl::{WeakInterval, WeylElement, Word, DEFAULT_CAP};
