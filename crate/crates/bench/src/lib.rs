//! Benchmark fixtures shared by the criterion benches.

use setfam::constructions::{construct, Construction};
use setfam::SetFamily;

/// A mid-sized non-initial family on `[n]`: a ball around `{n-2, n-1, n}`.
pub fn shifted_ball(n: usize, u: usize) -> SetFamily {
    construct(&Construction::Ball { n, u, center: vec![n - 2, n - 1, n], axis: None })
        .expect("valid ball parameters")
}
