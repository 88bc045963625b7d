//! First-return castles, their exact verification, and almost-finiteness
//! certificates.

mod castle;
mod certificate;

pub use castle::{castle_from_json, castle_to_json, first_return_castle, verify_castle, Castle, CastleReport, Tower};
pub use certificate::{
    almost_finite_certificate, certificate_to_json, invariance_threshold, odometer_certificate,
    odometer_certificate_to_json, verify_certificate, verify_certificate_json, verify_odometer_certificate,
    Certificate, CertificateReport,
};
