//! Compression operators: `i ← j` shifts, down-shifts and left-translates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{SetFamily, SubsetMask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ShiftOp {
    Shift { i: usize, j: usize },
    Downshift { i: usize },
    Translate { p: usize },
}

/// The operators that changed a family, in application order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftLog {
    pub ops: Vec<ShiftOp>,
    /// Full sweeps performed, the final unchanged sweep included.
    pub passes: usize,
}

impl ShiftLog {
    /// Re-applies the logged operators to `family`.
    pub fn replay(&self, family: &SetFamily) -> Result<SetFamily> {
        let mut f = family.clone();
        for op in &self.ops {
            f = match *op {
                ShiftOp::Shift { i, j } => shift_ij(&f, i, j)?,
                ShiftOp::Downshift { i } => down_shift(&f, i)?,
                ShiftOp::Translate { p } => left_translate(&f, p)?,
            };
        }
        Ok(f)
    }
}

/// `S_ij`: replace `j` by `i` in a member unless the image is already present.
pub fn shift_ij(family: &SetFamily, i: usize, j: usize) -> Result<SetFamily> {
    if i == 0 || i >= j || j > family.n() {
        return Err(Error::param(format!(
            "shift needs 1 <= i < j <= {}, got i={i}, j={j}",
            family.n()
        )));
    }
    Ok(shift_unchecked(family, i, j))
}

fn shift_unchecked(family: &SetFamily, i: usize, j: usize) -> SetFamily {
    family.map(|f| {
        if f.contains(j) && !f.contains(i) {
            let image = f.without(j).with(i);
            if !family.contains(image) {
                return image;
            }
        }
        f
    })
}

/// Shifts to a fixpoint of every `S_ij`, sweeping `(i, j)` lexicographically.
pub fn make_initial(family: &SetFamily) -> (SetFamily, ShiftLog) {
    let n = family.n();
    let mut f = family.clone();
    let mut log = ShiftLog::default();
    loop {
        log.passes += 1;
        let mut changed = false;
        for i in 1..n {
            for j in i + 1..=n {
                let next = shift_unchecked(&f, i, j);
                if next != f {
                    log.ops.push(ShiftOp::Shift { i, j });
                    f = next;
                    changed = true;
                }
            }
        }
        if !changed {
            return (f, log);
        }
    }
}

/// `a ≺ b`: same size and `a_i <= b_i` coordinatewise on sorted elements.
pub fn precedes(a: SubsetMask, b: SubsetMask) -> Result<bool> {
    if a.cardinality() != b.cardinality() {
        return Err(Error::SizeMismatch {
            left: a.cardinality(),
            right: b.cardinality(),
        });
    }
    Ok(a.elements().zip(b.elements()).all(|(x, y)| x <= y))
}

/// Sets obtained from `set` by moving one element `x` to `x - 1`.
/// These generate `≺` from below.
pub fn elementary_predecessors(set: SubsetMask) -> impl Iterator<Item = SubsetMask> {
    set.elements()
        .filter(move |&x| x > 1 && !set.contains(x - 1))
        .map(move |x| set.without(x).with(x - 1))
}

/// Each layer is a down-set of `≺`.
pub fn is_initial(family: &SetFamily) -> bool {
    family
        .iter()
        .all(|&g| elementary_predecessors(g).all(|f| family.contains(f)))
}

/// `D_i`: drop `i` from a member unless the result is already present.
pub fn down_shift(family: &SetFamily, i: usize) -> Result<SetFamily> {
    family.check_element(i)?;
    Ok(down_shift_unchecked(family, i))
}

fn down_shift_unchecked(family: &SetFamily, i: usize) -> SetFamily {
    family.map(|f| {
        if f.contains(i) {
            let image = f.without(i);
            if !family.contains(image) {
                return image;
            }
        }
        f
    })
}

/// Applies `D_1, ..., D_n` in sweeps until nothing changes. The result is a complex.
pub fn make_complex_by_downshift(family: &SetFamily) -> SetFamily {
    downshift_to_complex(family).0
}

/// [`make_complex_by_downshift`] with the applied operators recorded.
pub fn downshift_to_complex(family: &SetFamily) -> (SetFamily, ShiftLog) {
    let mut f = family.clone();
    let mut log = ShiftLog::default();
    loop {
        log.passes += 1;
        let mut changed = false;
        for i in 1..=f.n() {
            let next = down_shift_unchecked(&f, i);
            if next != f {
                log.ops.push(ShiftOp::Downshift { i });
                f = next;
                changed = true;
            }
        }
        if !changed {
            return (f, log);
        }
    }
}

/// `L_p`: subtract `p` from every element. The result lives on `[n - p]`.
pub fn left_translate(family: &SetFamily, p: usize) -> Result<SetFamily> {
    if p > family.n() {
        return Err(Error::param(format!("translate by {p} exceeds n = {}", family.n())));
    }
    let low = SubsetMask::full(p);
    if let Some(bad) = family.iter().find(|m| !m.intersection(low).is_empty()) {
        return Err(Error::param(format!(
            "member {bad} has an element <= {p}, cannot translate"
        )));
    }
    SetFamily::new(
        family.n() - p,
        family.iter().map(|m| SubsetMask::from_bits(m.bits() >> p)),
    )
}
