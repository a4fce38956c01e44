use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};

use super::{Metric, Value, KAPPA_CAP};

/// The extremal quantity to maximize, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// Largest u-union family.
    MaxUnionSize { n: usize, u: usize },
    /// Largest family of diameter at most `u`.
    MaxDiameterSize { n: usize, u: usize },
    /// Largest `σ_2d` over 2d-union families.
    OverflowEven { n: usize, d: usize },
    /// Largest `σ_2d+1` over (2d+1)-union families.
    OverflowOdd { n: usize, d: usize },
    /// Largest `|F^(≥⌈u/2⌉)|` over u-union families.
    UpperLayers { n: usize, u: usize },
    /// `γ(n, k)`: largest `min_x |F(x̄)|` over intersecting k-uniform families.
    Diversity { n: usize, k: usize },
    /// Largest `κ_u` over families of diameter at most `u`.
    DiametralOverflow { n: usize, u: usize },
}

impl Objective {
    pub const NAMES: [&'static str; 7] = [
        "max_union_size",
        "max_diameter_size",
        "overflow_even",
        "overflow_odd",
        "upper_layers",
        "diversity",
        "diametral_overflow",
    ];

    pub fn name(&self) -> &'static str {
        use Objective::*;
        match self {
            MaxUnionSize { .. } => "max_union_size",
            MaxDiameterSize { .. } => "max_diameter_size",
            OverflowEven { .. } => "overflow_even",
            OverflowOdd { .. } => "overflow_odd",
            UpperLayers { .. } => "upper_layers",
            Diversity { .. } => "diversity",
            DiametralOverflow { .. } => "diametral_overflow",
        }
    }

    /// The second parameter's name: `u`, `d` or `k`.
    pub fn parameter_name(name: &str) -> Option<&'static str> {
        match name.replace('-', "_").as_str() {
            "max_union_size" | "max_diameter_size" | "upper_layers" | "diametral_overflow" => Some("u"),
            "overflow_even" | "overflow_odd" => Some("d"),
            "diversity" => Some("k"),
            _ => None,
        }
    }

    fn parts(&self) -> (usize, &'static str, usize) {
        use Objective::*;
        match *self {
            MaxUnionSize { n, u } | MaxDiameterSize { n, u } | UpperLayers { n, u } | DiametralOverflow { n, u } => {
                (n, "u", u)
            }
            OverflowEven { n, d } | OverflowOdd { n, d } => (n, "d", d),
            Diversity { n, k } => (n, "k", k),
        }
    }

    pub fn n(&self) -> usize {
        self.parts().0
    }

    pub fn params(&self) -> BTreeMap<String, i64> {
        let (n, key, v) = self.parts();
        BTreeMap::from([("n".to_string(), n as i64), (key.to_string(), v as i64)])
    }

    /// Accepts `overflow-even` as well as `overflow_even`.
    pub fn from_parts(name: &str, params: &BTreeMap<String, i64>) -> Result<Self> {
        let key = Self::parameter_name(name)
            .ok_or_else(|| Error::param(format!("unknown objective {name:?}")))?;
        let get = |k: &str| -> Result<usize> {
            let v = *params
                .get(k)
                .ok_or_else(|| Error::param(format!("objective {name} needs parameter {k}")))?;
            usize::try_from(v).map_err(|_| Error::param(format!("parameter {k} = {v} must be nonnegative")))
        };
        let extra: Vec<&String> = params.keys().filter(|k| *k != "n" && *k != key).collect();
        if !extra.is_empty() {
            return Err(Error::param(format!("objective {name} does not take {extra:?}")));
        }
        let (n, v) = (get("n")?, get(key)?);
        let obj = match name.replace('-', "_").as_str() {
            "max_union_size" => Objective::MaxUnionSize { n, u: v },
            "max_diameter_size" => Objective::MaxDiameterSize { n, u: v },
            "overflow_even" => Objective::OverflowEven { n, d: v },
            "overflow_odd" => Objective::OverflowOdd { n, d: v },
            "upper_layers" => Objective::UpperLayers { n, u: v },
            "diversity" => Objective::Diversity { n, k: v },
            _ => Objective::DiametralOverflow { n, u: v },
        };
        obj.validate()?;
        Ok(obj)
    }

    pub fn validate(&self) -> Result<()> {
        let (n, key, v) = self.parts();
        let ok = match self {
            Objective::OverflowEven { d, .. } => *d >= 1 && 2 * d < n,
            Objective::OverflowOdd { d, .. } => *d >= 1 && 2 * d + 1 < n,
            Objective::Diversity { k, .. } => *k >= 1 && *k < n,
            _ => v >= 1 && v < n,
        };
        if !ok {
            let need = match key {
                "d" if matches!(self, Objective::OverflowOdd { .. }) => "d >= 1 and 2d+1 < n",
                "d" => "d >= 1 and 2d < n",
                "k" => "1 <= k < n",
                _ => "1 <= u < n",
            };
            return Err(Error::param(format!("{} needs {need}, got n={n}, {key}={v}", self.name())));
        }
        if matches!(self, Objective::DiametralOverflow { .. }) && n > KAPPA_CAP {
            return Err(Error::GroundSetTooLarge { n, cap: KAPPA_CAP });
        }
        Ok(())
    }

    /// Whether searching initial complexes loses nothing.
    pub fn is_shift_invariant(&self) -> bool {
        matches!(
            self,
            Objective::MaxUnionSize { .. }
                | Objective::MaxDiameterSize { .. }
                | Objective::OverflowEven { .. }
                | Objective::UpperLayers { .. }
        )
    }

    /// The union bound `u` implied by the objective's constraint.
    pub(crate) fn union_limit(&self) -> usize {
        use Objective::*;
        match *self {
            MaxUnionSize { u, .. } | MaxDiameterSize { u, .. } | UpperLayers { u, .. } | DiametralOverflow { u, .. } => u,
            OverflowEven { d, .. } => 2 * d,
            OverflowOdd { d, .. } => 2 * d + 1,
            Diversity { k, .. } => 2 * k - 1,
        }
    }

    pub(crate) fn metric(&self) -> Metric {
        match self {
            Objective::MaxDiameterSize { u, .. } | Objective::DiametralOverflow { u, .. } => Metric::SymDiff(*u),
            _ => Metric::Union(self.union_limit()),
        }
    }

    pub(crate) fn value_kind(&self) -> Value {
        match *self {
            Objective::OverflowOdd { d, .. } => Value::OddOverflow { d },
            Objective::Diversity { .. } => Value::Diversity,
            Objective::DiametralOverflow { u, .. } => Value::Kappa { u },
            _ => Value::Count,
        }
    }

    /// Layers materialized when searching initial complexes; lower layers
    /// never affect the value and are filled in by down-closure.
    pub(crate) fn restricted_sizes(&self) -> RangeInclusive<usize> {
        use Objective::*;
        match *self {
            MaxUnionSize { u, .. } | MaxDiameterSize { u, .. } | DiametralOverflow { u, .. } => 0..=u,
            OverflowEven { d, .. } => d + 1..=2 * d,
            OverflowOdd { d, .. } => d + 1..=2 * d + 1,
            UpperLayers { u, .. } => u.div_ceil(2)..=u,
            Diversity { k, .. } => k..=k,
        }
    }

    /// Layers used by exhaustive search over arbitrary families.
    pub(crate) fn unrestricted_sizes(&self) -> RangeInclusive<usize> {
        match *self {
            Objective::MaxDiameterSize { n, .. } | Objective::DiametralOverflow { n, .. } => 0..=n,
            _ => self.restricted_sizes(),
        }
    }
}
