use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown representation tag `{0}`")]
    UnknownTag(String),
    #[error("invalid dualling order {0}; expected one of 2, 4, 8, 16, 32, 64")]
    InvalidOrder(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("mismatched kinematics: {0}")]
    MismatchedKinematics(String),
    #[error("off-shell input: E^2 = {e2} but p^2 + m^2 = {pm2}")]
    OffShell { e2: String, pm2: String },
    #[error("unsupported potential: {0}")]
    Unsupported(String),
    #[error("supercritical coupling: (qA)^2 = {qa2} >= (j+1/2)^2 = {j2}")]
    Supercritical { qa2: f64, j2: f64 },
    #[error("scale ordering violated: need 0 < mu ({mu}) <= M_X ({mx})")]
    ScaleOrdering { mu: f64, mx: f64 },
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unknown flavour `{0}`")]
    UnknownFlavour(String),
    #[error("triangle inequality violated for sides ({0}, {1}, {2})")]
    Triangle(f64, f64, f64),
    #[error("data error: {0}")]
    Data(String),
}
