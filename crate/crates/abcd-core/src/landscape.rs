//! Moving-peaks landscape: cone peaks that drift, grow, and shrink on a
//! fixed evaluation schedule, plus an oracle for the current global optimum.
//!
//! The oracle ([`Landscape::global_optimum_value`]) exists for error
//! measurement only and must never be handed to optimizer components.

use std::cell::Cell;
use std::fmt::Write as _;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::geometry::{euclidean_distance, norm, sample_unit_vector};
use crate::rng::{stream_rng, STREAM_LANDSCAPE};

pub const DEFAULT_DOMAIN: (f64, f64) = (0.0, 100.0);
pub const DEFAULT_HEIGHT_RANGE: (f64, f64) = (30.0, 70.0);
pub const DEFAULT_WIDTH_RANGE: (f64, f64) = (1.0, 12.0);
pub const DEFAULT_HEIGHT_SEVERITY: f64 = 7.0;
pub const DEFAULT_WIDTH_SEVERITY: f64 = 1.0;
pub const DEFAULT_CHANGE_FREQUENCY: u64 = 5000;

/// Axis-aligned box the search happens in.
#[derive(Clone, Debug, PartialEq)]
pub struct Bounds {
    pub low: Vec<f64>,
    pub high: Vec<f64>,
}

impl Bounds {
    pub fn new(low: Vec<f64>, high: Vec<f64>) -> Self {
        assert_eq!(low.len(), high.len());
        Bounds { low, high }
    }

    /// The standard domain, `[0, 100]` on every axis.
    pub fn standard(dims: usize) -> Self {
        Bounds {
            low: vec![DEFAULT_DOMAIN.0; dims],
            high: vec![DEFAULT_DOMAIN.1; dims],
        }
    }

    pub fn dims(&self) -> usize {
        self.low.len()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.iter()
            .enumerate()
            .all(|(i, &v)| v >= self.low[i] && v <= self.high[i])
    }

    /// Clamps every coordinate into the box in place.
    pub fn clamp(&self, x: &mut [f64]) {
        for (i, v) in x.iter_mut().enumerate() {
            *v = v.clamp(self.low[i], self.high[i]);
        }
    }

    /// Uniform random point inside the box.
    pub fn sample_point<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        (0..self.dims())
            .map(|i| rng.random_range(self.low[i]..=self.high[i]))
            .collect()
    }
}

/// One cone peak. Its value at `x` is `height - width * |x - center|`.
#[derive(Clone, Debug)]
pub struct Peak {
    pub center: Vec<f64>,
    pub height: f64,
    pub width: f64,
    /// Shift applied at the most recent change; drives correlated movement.
    pub last_shift: Vec<f64>,
}

impl Peak {
    pub fn value(&self, x: &[f64]) -> f64 {
        self.height - self.width * euclidean_distance(x, &self.center)
    }
}

/// Declarative description of a benchmark instance. A [`Landscape`] is
/// constructed from it; equal specs yield bit-identical trajectories.
#[derive(Clone, Debug, PartialEq)]
pub struct InstanceSpec {
    pub dimensions: usize,
    pub n_peaks: usize,
    pub severity: f64,
    pub lambda: f64,
    pub height_range: (f64, f64),
    pub width_range: (f64, f64),
    pub change_frequency: u64,
    pub seed: u64,
}

impl InstanceSpec {
    /// Scenario defaults: heights in [30, 70], widths in [1, 12], a change
    /// every 5000 evaluations, uncorrelated movement.
    pub fn new(dimensions: usize, n_peaks: usize, severity: f64, seed: u64) -> Self {
        InstanceSpec {
            dimensions,
            n_peaks,
            severity,
            lambda: 0.0,
            height_range: DEFAULT_HEIGHT_RANGE,
            width_range: DEFAULT_WIDTH_RANGE,
            change_frequency: DEFAULT_CHANGE_FREQUENCY,
            seed,
        }
    }

    /// Parses the `<dims>D-<peaks>P-<severity>s` shorthand, e.g. `5D-10P-1s`.
    pub fn from_shorthand(s: &str, seed: u64) -> Result<Self> {
        let err = || Error::InvalidConfig(format!("instance '{s}' is not of the form <dims>D-<peaks>P-<severity>s"));
        let parts: Vec<&str> = s.split('-').collect();
        if parts.len() != 3 {
            return Err(err());
        }
        let dims: usize = parts[0].strip_suffix(['D', 'd']).ok_or_else(err)?.parse().map_err(|_| err())?;
        let peaks: usize = parts[1].strip_suffix(['P', 'p']).ok_or_else(err)?.parse().map_err(|_| err())?;
        let severity: f64 = parts[2].strip_suffix(['S', 's']).ok_or_else(err)?.parse().map_err(|_| err())?;
        let spec = InstanceSpec::new(dims, peaks, severity, seed);
        spec.validate()?;
        Ok(spec)
    }

    /// Shorthand identifier for reports, e.g. `5D-10P-1s`.
    pub fn id(&self) -> String {
        format!("{}D-{}P-{}s", self.dimensions, self.n_peaks, self.severity)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.dimensions == 0 {
            return bad("dimensions must be ≥ 1".into());
        }
        if self.n_peaks == 0 {
            return bad("n_peaks must be ≥ 1".into());
        }
        if !(self.severity >= 0.0) {
            return bad("severity must be ≥ 0".into());
        }
        if !(0.0..=1.0).contains(&self.lambda) {
            return bad("lambda must be in [0, 1]".into());
        }
        if self.change_frequency == 0 {
            return bad("change_frequency must be ≥ 1".into());
        }
        if self.height_range.0 > self.height_range.1 {
            return bad("height_range must be non-empty".into());
        }
        if self.width_range.0 > self.width_range.1 {
            return bad("width_range must be non-empty".into());
        }
        Ok(())
    }
}

/// The live benchmark state: peaks plus the change machinery.
#[derive(Clone, Debug)]
pub struct Landscape {
    peaks: Vec<Peak>,
    bounds: Bounds,
    severity: f64,
    lambda: f64,
    pub height_severity: f64,
    pub width_severity: f64,
    height_range: (f64, f64),
    width_range: (f64, f64),
    change_frequency: u64,
    env_index: u64,
    rng: ChaCha8Rng,
    eval_count: Cell<u64>,
}

impl Landscape {
    /// Builds the initial environment: peak centers uniform in the box,
    /// heights and widths uniform in their ranges.
    pub fn from_spec(spec: &InstanceSpec) -> Result<Self> {
        spec.validate()?;
        let bounds = Bounds::standard(spec.dimensions);
        let mut rng = stream_rng(spec.seed, STREAM_LANDSCAPE);
        let peaks = (0..spec.n_peaks)
            .map(|_| {
                let center = bounds.sample_point(&mut rng);
                let height = rng.random_range(spec.height_range.0..=spec.height_range.1);
                let width = rng.random_range(spec.width_range.0..=spec.width_range.1);
                Peak {
                    center,
                    height,
                    width,
                    last_shift: vec![0.0; spec.dimensions],
                }
            })
            .collect();
        Ok(Landscape {
            peaks,
            bounds,
            severity: spec.severity,
            lambda: spec.lambda,
            height_severity: DEFAULT_HEIGHT_SEVERITY,
            width_severity: DEFAULT_WIDTH_SEVERITY,
            height_range: spec.height_range,
            width_range: spec.width_range,
            change_frequency: spec.change_frequency,
            env_index: 1,
            rng,
            eval_count: Cell::new(0),
        })
    }

    /// Fitness at `x`: the maximum cone value over all peaks.
    ///
    /// Does not check bounds (boundary handling is the caller's job) and does
    /// not know about the evaluation budget; it only counts raw calls so the
    /// engine can cross-check its own accounting.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dims() {
            return Err(Error::DimensionMismatch {
                expected: self.dims(),
                got: x.len(),
            });
        }
        self.eval_count.set(self.eval_count.get() + 1);
        let mut best = f64::NEG_INFINITY;
        for peak in &self.peaks {
            let v = peak.value(x);
            if v > best {
                best = v;
            }
        }
        Ok(best)
    }

    /// Fitness of the current global optimum. For cone peaks this is the
    /// tallest apex. Oracle-only: feeds the error metric, never the search.
    pub fn global_optimum_value(&self) -> f64 {
        self.peaks
            .iter()
            .map(|p| p.height)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Applies one scheduled environment change.
    ///
    /// Heights and widths take a Gaussian step and clamp to their ranges.
    /// Each center moves by a vector of length exactly `severity` whose
    /// direction blends a fresh random direction with the previous shift
    /// (weight `lambda`), reflecting at the box walls.
    pub fn apply_change(&mut self) {
        let dims = self.dims();
        for pi in 0..self.peaks.len() {
            let dh: f64 = self.rng.sample(StandardNormal);
            let dw: f64 = self.rng.sample(StandardNormal);
            let peak = &mut self.peaks[pi];
            peak.height = (peak.height + self.height_severity * dh)
                .clamp(self.height_range.0, self.height_range.1);
            peak.width = (peak.width + self.width_severity * dw)
                .clamp(self.width_range.0, self.width_range.1);

            if self.severity > 0.0 {
                let prev = peak.last_shift.clone();
                let dir = blended_direction(&mut self.rng, &prev, self.lambda, dims);
                let mut shift: Vec<f64> = dir.iter().map(|d| d * self.severity).collect();
                for i in 0..dims {
                    let (lo, hi) = (self.bounds.low[i], self.bounds.high[i]);
                    let mut c = self.peaks[pi].center[i] + shift[i];
                    // reflect at the walls; the stored shift component flips
                    // with each bounce so correlation carries the bounce
                    while c < lo || c > hi {
                        if c < lo {
                            c = 2.0 * lo - c;
                        } else {
                            c = 2.0 * hi - c;
                        }
                        shift[i] = -shift[i];
                    }
                    self.peaks[pi].center[i] = c;
                }
                self.peaks[pi].last_shift = shift;
            }
        }
        self.env_index += 1;
    }

    pub fn dims(&self) -> usize {
        self.bounds.dims()
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn peaks(&self) -> &[Peak] {
        &self.peaks
    }

    pub fn env_index(&self) -> u64 {
        self.env_index
    }

    pub fn change_frequency(&self) -> u64 {
        self.change_frequency
    }

    /// Raw count of `evaluate` calls since construction.
    pub fn evaluation_count(&self) -> u64 {
        self.eval_count.get()
    }
}

/// Unit direction mixing `lambda * previous` with `(1 - lambda) * random`.
/// With no previous shift the direction is purely random.
fn blended_direction<R: Rng + ?Sized>(
    rng: &mut R,
    last_shift: &[f64],
    lambda: f64,
    dims: usize,
) -> Vec<f64> {
    let prev_norm = norm(last_shift);
    loop {
        let r = sample_unit_vector(rng, dims);
        let blended: Vec<f64> = if prev_norm > 0.0 {
            (0..dims)
                .map(|i| (1.0 - lambda) * r[i] + lambda * last_shift[i] / prev_norm)
                .collect()
        } else {
            r
        };
        let n = norm(&blended);
        if n > 1e-12 {
            return blended.into_iter().map(|x| x / n).collect();
        }
        // previous and random direction cancelled almost exactly; redraw
    }
}

/// Renders the peak trajectory over `n_changes` environments as CSV
/// (`env,peak_id,height,width,center_0..center_{d-1}`), for plotting.
pub fn trajectory_csv(spec: &InstanceSpec, n_changes: u64) -> Result<String> {
    let mut ls = Landscape::from_spec(spec)?;
    let mut out = String::from("env,peak_id");
    out.push_str(",height,width");
    for d in 0..spec.dimensions {
        let _ = write!(out, ",center_{d}");
    }
    out.push('\n');
    for _ in 0..=n_changes {
        for (pid, peak) in ls.peaks().iter().enumerate() {
            let _ = write!(out, "{},{},{},{}", ls.env_index(), pid, peak.height, peak.width);
            for c in &peak.center {
                let _ = write!(out, ",{c}");
            }
            out.push('\n');
        }
        ls.apply_change();
    }
    Ok(out)
}
