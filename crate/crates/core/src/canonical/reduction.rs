use serde::Serialize;

use crate::error::Result;
use crate::partition_core::{core_profile, standard_display, Partition};

/// One runner swap: runners `i-1` and `i` are exchanged, realised by
/// `f_r^{(k)}` in the Fock space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwapStep {
    pub i: usize,
    pub r: usize,
    pub k: usize,
    pub core: Partition,
    pub swapped: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub steps: Vec<SwapStep>,
    pub terminal: Partition,
}

/// `Ψ(λ)`: exchange runners `i-1` and `i` in the standard display of `λ`.
pub fn swap_runners_of(lambda: &Partition, e: usize, i: usize) -> Partition {
    let (display, _) = standard_display(lambda, e, None);
    display.swap_runners(i - 1, i).partition()
}

/// The first swap that lowers the inversion count, if any.
pub fn next_swap(core: &Partition, e: usize) -> Result<Option<SwapStep>> {
    let profile = core_profile(core, e, None)?;
    let n = profile.counts();
    let Some(i) = (2..e).find(|&i| n[i - 1] > n[i]) else {
        return Ok(None);
    };
    let r = (i + e - core.len() % e) % e;
    let k = n[i - 1] - n[i];
    let swapped = swap_runners_of(core, e, i);
    Ok(Some(SwapStep { i, r, k, core: core.clone(), swapped }))
}

/// Swap adjacent out-of-order runners until the core is of Rouquier type.
pub fn rouquier_reduction(core: &Partition, e: usize) -> Result<Reduction> {
    let mut steps = Vec::new();
    let mut current = core.clone();
    while let Some(step) = next_swap(&current, e)? {
        current = step.swapped.clone();
        steps.push(step);
    }
    Ok(Reduction { steps, terminal: current })
}
