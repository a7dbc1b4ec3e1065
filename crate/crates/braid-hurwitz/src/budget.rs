/// Default cap on enumerated tuple states.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// `HM_BUDGET` if set and parseable, else [`DEFAULT_BUDGET`].
pub fn default_budget() -> u128 {
    std::env::var("HM_BUDGET")
        .ok()
        .and_then(|s| s.trim().replace('_', "").parse::<f64>().ok())
        .filter(|&v| v >= 1.0)
        .map(|v| v as u128)
        .unwrap_or(DEFAULT_BUDGET)
}
