//! Search driver (filled in after the master and fixing layers).

pub fn nf_solve() {}
pub struct Incumbent;
pub struct LevelStat;
pub struct NfConfig;
pub enum RcvfSpec {}
pub struct SolveOutcome;
pub enum SolveStatus {}
