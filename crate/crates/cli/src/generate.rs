//! Seeded synthetic corpora.
//!
//! The random stream is xorshift64* (Vigna): the state is updated by
//! `x ^= x >> 12; x ^= x << 25; x ^= x >> 27` and each output is
//! `x * 0x2545F4914F6CDD1D` (wrapping). The seed is first passed through
//! one splitmix64 step (`+ 0x9E3779B97F4A7C15`, then multiply by
//! `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB` between xor-shifts of 30,
//! 27 and 31) so that seed 0 is usable. Only integer arithmetic is used
//! to decide the output, so a config yields the same file everywhere.

use fpa_core::granularity::is_granular_counts;
use fpa_core::{FunctionKind, InventoryItem, ProjectCorpus, RaterMeasurement};

use crate::error::{CliError, Result};

/// Caps for sampling the non-granular region.
pub const MAX_STRUCTURAL: u32 = 10;
pub const MAX_DET: u32 = 80;

/// Relative draw weights in [`FunctionKind::ALL`] order.
pub const KIND_WEIGHTS: [u64; 5] = [20, 10, 30, 20, 20];

/// Rater pairs assigned to projects in rotation.
pub const RATER_PAIRS: [(&str, &str); 6] = [
    ("M1", "M2"),
    ("M1", "M3"),
    ("M1", "M4"),
    ("M2", "M3"),
    ("M2", "M4"),
    ("M3", "M4"),
];

/// Chance, in percent, that the second rater's record of a function has its
/// DET count shifted by one.
const DISAGREEMENT_PERCENT: u64 = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub projects: u32,
    pub min_functions: u32,
    pub max_functions: u32,
    /// Percent of functions drawn from the granular region.
    pub granular_target: u32,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 1,
            projects: 30,
            min_functions: 20,
            max_functions: 60,
            granular_target: 50,
        }
    }
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(CliError::Usage(m));
        if self.projects == 0 {
            return bad("--projects must be at least 1".into());
        }
        if self.min_functions == 0 {
            return bad("--min-functions must be at least 1".into());
        }
        if self.min_functions > self.max_functions {
            return bad(format!(
                "--min-functions ({}) exceeds --max-functions ({})",
                self.min_functions, self.max_functions
            ));
        }
        if self.granular_target > 100 {
            return bad(format!("--granular-target must be in 0..=100, got {}", self.granular_target));
        }
        Ok(())
    }
}

/// xorshift64* generator.
#[derive(Debug, Clone)]
pub struct XorShift64Star(u64);

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        XorShift64Star(if z == 0 { 0x9E37_79B9_7F4A_7C15 } else { z })
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform in `0..n` by widening multiply; `n` must be nonzero.
    pub fn below(&mut self, n: u64) -> u64 {
        ((u128::from(self.next_u64()) * u128::from(n)) >> 64) as u64
    }

    fn pick_weighted(&mut self, weights: &[u64]) -> usize {
        let mut r = self.below(weights.iter().sum());
        for (i, &w) in weights.iter().enumerate() {
            if r < w {
                return i;
            }
            r -= w;
        }
        unreachable!("r is below the weight total")
    }
}

/// Lattice points of one granularity region for `kind`, within the caps.
pub fn region(kind: FunctionKind, granular: bool) -> Vec<(u32, u32)> {
    (kind.min_structural()..=MAX_STRUCTURAL)
        .flat_map(|s| (1..=MAX_DET).map(move |d| (s, d)))
        .filter(|&(s, d)| is_granular_counts(kind, s, d) == granular)
        .collect()
}

pub fn generate(config: &GeneratorConfig) -> Result<ProjectCorpus> {
    config.validate()?;
    let regions: Vec<[Vec<(u32, u32)>; 2]> = FunctionKind::ALL
        .iter()
        .map(|&k| [region(k, false), region(k, true)])
        .collect();

    let mut rng = XorShift64Star::new(config.seed);
    let mut corpus = ProjectCorpus::new();
    let span = u64::from(config.max_functions - config.min_functions) + 1;
    for p in 0..config.projects {
        let id = (p + 1).to_string();
        let n = config.min_functions as u64 + rng.below(span);
        let mut first = Vec::with_capacity(n as usize);
        let mut second = Vec::with_capacity(n as usize);
        for _ in 0..n {
            let k = rng.pick_weighted(&KIND_WEIGHTS);
            let kind = FunctionKind::ALL[k];
            let granular = rng.below(100) < u64::from(config.granular_target);
            let cells = &regions[k][usize::from(granular)];
            let (s, d) = cells[rng.below(cells.len() as u64) as usize];
            let multiplicity = match rng.below(20) {
                0 => 3,
                1..=2 => 2,
                _ => 1,
            };
            let item = InventoryItem::new(kind, s, d, multiplicity)?;
            first.push(item);

            let mut other = item;
            if rng.below(100) < DISAGREEMENT_PERCENT {
                let shifted = if rng.below(2) == 0 { d - 1 } else { d + 1 };
                if (1..=MAX_DET).contains(&shifted) && is_granular_counts(kind, s, shifted) == granular {
                    other = InventoryItem::new(kind, s, shifted, multiplicity)?;
                }
            }
            second.push(other);
        }
        let (a, b) = RATER_PAIRS[p as usize % RATER_PAIRS.len()];
        corpus.insert(RaterMeasurement::new(id.as_str(), a, first))?;
        corpus.insert(RaterMeasurement::new(id.as_str(), b, second))?;
    }
    Ok(corpus)
}
