//! Toy-data generation and CSV dataset I/O.
//!
//! The generator reproduces a 3x3 checkerboard of nine Gaussian clusters:
//! five clusters labeled +1 (origin plus the four diagonal directions at
//! unit radius) interleaved with four clusters labeled -1 on the axes.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

pub mod rng;

use rng::Xoshiro256PlusPlus;

/// Binary-labeled point set. Labels are exactly +1 or -1.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    points: Vec<Vec<f64>>,
    labels: Vec<f64>,
}

impl Dataset {
    pub fn new(points: Vec<Vec<f64>>, labels: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidParameter("dataset must be nonempty".into()));
        }
        if points.len() != labels.len() {
            return Err(Error::DimensionMismatch(points.len(), labels.len()));
        }
        let dim = points[0].len();
        if dim == 0 {
            return Err(Error::InvalidParameter("points must have dimension >= 1".into()));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch(dim, p.len()));
            }
        }
        for (i, &y) in labels.iter().enumerate() {
            if y != 1.0 && y != -1.0 {
                return Err(Error::BadLabel(i));
            }
        }
        Ok(Dataset { points, labels })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn labels(&self) -> &[f64] {
        &self.labels
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn label(&self, i: usize) -> f64 {
        self.labels[i]
    }

    /// (count of +1, count of -1)
    pub fn class_counts(&self) -> (usize, usize) {
        let plus = self.labels.iter().filter(|&&y| y > 0.0).count();
        (plus, self.labels.len() - plus)
    }

    pub fn has_both_classes(&self) -> bool {
        let (p, m) = self.class_counts();
        p > 0 && m > 0
    }

    /// Smallest and largest value per coordinate.
    pub fn bounding_box(&self) -> (Vec<f64>, Vec<f64>) {
        let dim = self.dim();
        let mut lo = vec![f64::INFINITY; dim];
        let mut hi = vec![f64::NEG_INFINITY; dim];
        for p in &self.points {
            for (d, &v) in p.iter().enumerate() {
                lo[d] = lo[d].min(v);
                hi[d] = hi[d].max(v);
            }
        }
        (lo, hi)
    }
}

pub const CLASS_PLUS_CENTERS: [[f64; 2]; 5] = [
    [0.0, 0.0],
    [std::f64::consts::FRAC_1_SQRT_2, std::f64::consts::FRAC_1_SQRT_2],
    [-std::f64::consts::FRAC_1_SQRT_2, std::f64::consts::FRAC_1_SQRT_2],
    [-std::f64::consts::FRAC_1_SQRT_2, -std::f64::consts::FRAC_1_SQRT_2],
    [std::f64::consts::FRAC_1_SQRT_2, -std::f64::consts::FRAC_1_SQRT_2],
];

pub const CLASS_MINUS_CENTERS: [[f64; 2]; 4] = [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]];

/// Settings for [`generate_toy`]. Defaults match the reference experiment:
/// 50 points per cluster, isotropic spread 0.2 for both classes.
#[derive(Debug, Clone, Copy)]
pub struct ToyConfig {
    pub seed: u64,
    pub points_per_cluster: usize,
    pub sigma1: f64,
    pub sigma2: f64,
}

impl Default for ToyConfig {
    fn default() -> Self {
        ToyConfig {
            seed: 42,
            points_per_cluster: 50,
            sigma1: 0.2,
            sigma2: 0.2,
        }
    }
}

impl ToyConfig {
    fn validate(&self) -> Result<()> {
        if self.points_per_cluster == 0 {
            return Err(Error::InvalidParameter("points_per_cluster must be >= 1".into()));
        }
        for (name, s) in [("sigma1", self.sigma1), ("sigma2", self.sigma2)] {
            if !(s >= 0.0) || !s.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be a nonnegative finite number, got {s}"
                )));
            }
        }
        Ok(())
    }
}

/// Draw `points_per_cluster` points around each of the nine cluster centers,
/// in a fixed cluster order (the five +1 clusters first). Each point is
/// `center + sigma * z` with `z` a standard bivariate normal sample.
/// Deterministic given the seed.
pub fn generate_toy(cfg: &ToyConfig) -> Result<Dataset> {
    cfg.validate()?;
    let k = cfg.points_per_cluster;
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(cfg.seed);
    let mut points = Vec::with_capacity(9 * k);
    let mut labels = Vec::with_capacity(9 * k);
    for center in CLASS_PLUS_CENTERS {
        for _ in 0..k {
            let (z1, z2) = rng.normal_pair();
            points.push(vec![center[0] + cfg.sigma1 * z1, center[1] + cfg.sigma1 * z2]);
            labels.push(1.0);
        }
    }
    for center in CLASS_MINUS_CENTERS {
        for _ in 0..k {
            let (z1, z2) = rng.normal_pair();
            points.push(vec![center[0] + cfg.sigma2 * z1, center[1] + cfg.sigma2 * z2]);
            labels.push(-1.0);
        }
    }
    Dataset::new(points, labels)
}

/// Render the dataset in the CSV layout: label first, then features,
/// no header. Numbers print in shortest round-trip form.
pub fn to_csv_string(data: &Dataset) -> String {
    let mut out = String::new();
    for (p, &y) in data.points().iter().zip(data.labels()) {
        out.push_str(if y > 0.0 { "1" } else { "-1" });
        for v in p {
            let _ = write!(out, ",{v}");
        }
        out.push('\n');
    }
    out
}

pub fn write_csv<P: AsRef<Path>>(data: &Dataset, path: P) -> Result<()> {
    fs::write(path, to_csv_string(data))?;
    Ok(())
}

/// Parse the CSV layout produced by [`write_csv`]. Lines starting with `#`
/// and blank lines are ignored; reported line numbers count physical lines.
pub fn parse_csv(text: &str) -> Result<Dataset> {
    let mut points = Vec::new();
    let mut labels = Vec::new();
    let mut width: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split(',');
        let label_text = fields.next().unwrap_or("").trim();
        let y: f64 = label_text
            .parse()
            .map_err(|_| Error::BadCsvLabel { line })?;
        if y != 1.0 && y != -1.0 {
            return Err(Error::BadCsvLabel { line });
        }
        let mut row = Vec::new();
        for field in fields {
            let text = field.trim();
            let v: f64 = text.parse().map_err(|_| Error::BadCsvNumber {
                line,
                text: text.to_string(),
            })?;
            row.push(v);
        }
        if row.is_empty() {
            return Err(Error::BadCsvWidth {
                line,
                expected: width.unwrap_or(1),
                got: 0,
            });
        }
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(Error::BadCsvWidth {
                    line,
                    expected: w,
                    got: row.len(),
                });
            }
            _ => {}
        }
        points.push(row);
        labels.push(y);
    }
    Dataset::new(points, labels)
}

pub fn read_csv<P: AsRef<Path>>(path: P) -> Result<Dataset> {
    parse_csv(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_sigma_collapses_to_centers() {
        let cfg = ToyConfig {
            seed: 7,
            points_per_cluster: 1,
            sigma1: 0.0,
            sigma2: 0.0,
        };
        let d = generate_toy(&cfg).unwrap();
        assert_eq!(d.len(), 9);
        for (i, center) in CLASS_PLUS_CENTERS.iter().enumerate() {
            assert_eq!(d.point(i), center.as_slice());
            assert_eq!(d.label(i), 1.0);
        }
        for (i, center) in CLASS_MINUS_CENTERS.iter().enumerate() {
            assert_eq!(d.point(5 + i), center.as_slice());
            assert_eq!(d.label(5 + i), -1.0);
        }
    }

    #[test]
    fn same_seed_same_dataset() {
        let cfg = ToyConfig::default();
        let a = generate_toy(&cfg).unwrap();
        let b = generate_toy(&cfg).unwrap();
        assert_eq!(a, b);
        let c = generate_toy(&ToyConfig { seed: 43, ..cfg }).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn default_sizes() {
        let d = generate_toy(&ToyConfig::default()).unwrap();
        assert_eq!(d.len(), 450);
        assert_eq!(d.class_counts(), (250, 200));
    }

    #[test]
    fn cluster_means_converge() {
        let cfg = ToyConfig {
            seed: 1234,
            points_per_cluster: 2000,
            sigma1: 0.2,
            sigma2: 0.2,
        };
        let d = generate_toy(&cfg).unwrap();
        let centers: Vec<[f64; 2]> = CLASS_PLUS_CENTERS
            .iter()
            .chain(CLASS_MINUS_CENTERS.iter())
            .copied()
            .collect();
        for (c, center) in centers.iter().enumerate() {
            let lo = c * 2000;
            let mut mean = [0.0, 0.0];
            for i in lo..lo + 2000 {
                mean[0] += d.point(i)[0];
                mean[1] += d.point(i)[1];
            }
            mean[0] /= 2000.0;
            mean[1] /= 2000.0;
            for axis in 0..2 {
                assert!(
                    (mean[axis] - center[axis]).abs() < 0.02,
                    "cluster {c} axis {axis}: mean {} vs center {}",
                    mean[axis],
                    center[axis]
                );
            }
        }
    }

    #[test]
    fn csv_parse_single_row() {
        let d = parse_csv("1,0.5,-0.25\n").unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.point(0), &[0.5, -0.25]);
        assert_eq!(d.label(0), 1.0);
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let cfg = ToyConfig {
            seed: 3,
            points_per_cluster: 1,
            sigma1: 0.0,
            sigma2: 0.0,
        };
        let d = generate_toy(&cfg).unwrap();
        let back = parse_csv(&to_csv_string(&d)).unwrap();
        assert_eq!(d, back);

        // noisy values survive the round trip bit-exactly too
        let noisy = generate_toy(&ToyConfig::default()).unwrap();
        assert_eq!(noisy, parse_csv(&to_csv_string(&noisy)).unwrap());
    }

    #[test]
    fn csv_bad_label_names_line() {
        let err = parse_csv("2,0.5,0.5\n").unwrap_err();
        assert_eq!(err.to_string(), "label must be -1 or 1 (line 1)");
        let err = parse_csv("# comment\n1,0.5\n0,1.0\n").unwrap_err();
        assert_eq!(err.to_string(), "label must be -1 or 1 (line 3)");
    }

    #[test]
    fn csv_width_mismatch_names_line() {
        let err = parse_csv("1,0.5,0.5\n-1,0.25\n").unwrap_err();
        assert!(matches!(err, Error::BadCsvWidth { line: 2, expected: 2, got: 1 }));
    }

    #[test]
    fn csv_bad_number_names_line() {
        let err = parse_csv("1,abc\n").unwrap_err();
        assert!(matches!(err, Error::BadCsvNumber { line: 1, .. }));
    }

    #[test]
    fn csv_comments_and_blanks_ignored() {
        let d = parse_csv("# header comment\n\n1,1.0,2.0\n# mid\n-1,3.0,4.0\n").unwrap();
        assert_eq!(d.len(), 2);
    }
}
