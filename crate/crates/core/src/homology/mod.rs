//! Group homology of `Z ⋊ Z₂ = Z₂ * Z₂` with coefficients in `C(X, Z)`.

mod bar;
mod comp;
mod freeproduct;
mod involution;
mod oracle;
mod telescope;
mod transfer;
mod value;

pub use bar::{bar_homology, bar_oracle, MAX_CELLS, MAX_DEGREE};
pub use comp::{compute_homology, theorem_comp, Case, CaseEvidence, HomologyReport, Method};
pub use freeproduct::{denjoy_free_product, denjoy_level, FreeProductHomology, FreeProductLevel};
pub use involution::InvolutionModule;
pub use oracle::{formula_homology, oracle_check, random_module, OracleMismatch, OracleReport, ORACLE_DEGREE};
pub use telescope::{odometer_telescope, rotation_telescope, OdometerTelescope, RotationTelescope, ODOMETER_CELL_CAP};
pub use transfer::{check_witness, denjoy_transfer, transfer_report, TransferReport};
pub use value::{GroupValue, HomologyTable};
