//! Plane graphs as rotation systems, and the constructions built on them:
//! polyhedral (planar 3-connected) graphs with prescribed vertex and face
//! valencies, self-dual polyhedra for any admissible degree sequence, radial
//! graphs, quadrangulations of the sphere, and the breadth-first closure of
//! the cube under the quadrangulation growth move.

pub mod algorithms;
pub mod canon;
pub mod closure;
pub mod connectivity;
pub mod dual;
pub mod error;
pub mod graph;
pub mod io;
pub mod pmove;
pub mod quad;
pub mod radial;
pub mod seeds;
pub mod split;
pub mod verify;

pub use algorithms::{
    admissible_sequence, algorithm1, algorithm1_states, algorithm2, algorithm2_radial,
    algorithm2_splits, algorithm2_trace, algorithm3_oracle, minimal_order,
    permutation_witness, Alg1State, DegreeTuple,
};
pub use canon::{canonical_code, is_isomorphic, CanonicalCode};
pub use closure::{
    closure, closure_with_limit, is_self_dual_radial, table1, ClosureLevel, CountRow,
    CountsTable, REFERENCE_TOTAL_SELF_DUALS,
};
pub use connectivity::{is_2connected, is_3connected};
pub use dual::dual;
pub use error::{Error, Result};
pub use graph::{FaceSet, PlaneGraph};
pub use pmove::{all_positions, corresponding_position, p_equiv_check, p_move, PPosition};
pub use quad::{bipartition, is_quadrangulation, separating_4cycles, QuadGraph};
pub use radial::{is_radial_of_polyhedron, primal, radial};
pub use seeds::{h5_seed, pseudo_double_wheel, tetrahedron, wheel};
pub use split::{edge_split, SplitTriple};
pub use verify::{check_bounds, is_polyhedral, is_self_dual, satisfies_sn, BoundCheck, BoundsReport};
