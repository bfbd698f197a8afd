//! Verification toolkit for claw-free 1-planar graphs.
//!
//! * [`graph`]: simple graphs and their invariants (claws, connectivity, ...).
//! * [`drawing`]: combinatorial 1-plane drawings, planarizations, faces and
//!   cycle sides.
//! * [`oracle`]: exhaustive 1-planarity search for small graphs.
//! * [`bounds`]: the edge-counting argument bounding the maximum degree.
//! * [`generators`]: the extremal graphs and families with bundled drawings.
//! * [`audit`]: executable checks of the structural theorems and lemmas.
//! * [`format`]: the line-oriented graph/drawing file format and DOT export.

pub mod graph;
pub mod planarity;
pub mod drawing;
pub mod oracle;
pub mod bounds;
pub mod format;
pub mod generators;
pub mod audit;
