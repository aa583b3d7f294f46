use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::components::{candidate_degrees, ComponentSearch};
use crate::error::{Error, Result};
use crate::exponent::{MultiDegree, Signature};
use crate::ideal::MonomialIdeal;
use crate::staircase::{z_slice_table, Staircase};

/// Graded and signature-refined dimensions of `T(I) = Hom(I, S/I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentReport {
    pub ideal: MonomialIdeal,
    pub d: u64,
    /// Nonzero graded pieces only.
    pub per_degree: BTreeMap<MultiDegree, u64>,
    /// Every signature in `n` variables, including zeros.
    pub signature_totals: BTreeMap<Signature, u64>,
    pub total: u64,
    /// `numgens(I) * dim soc(S/I)`.
    pub socle_dim: u64,
    /// Bounded components that are single points, summed over all degrees.
    pub singleton_components: u64,
    /// `dim T(I)_j`, the part of `x`-degree `j` (first coordinate).
    pub x_degree_slices: BTreeMap<i64, u64>,
    /// Three variables only: `(i, j) -> (lhs, rhs)` of the slice duality
    /// `Σ_{α1=i,α2=j} dim = b_ij + Σ_{α1=-i-1,α2=-j-1} dim`.
    pub slice_pairs: BTreeMap<(usize, usize), (u64, u64)>,
}

impl TangentReport {
    /// Total over one signature, by name (`"ppn"`, ...). Unknown names give 0.
    pub fn sig(&self, name: &str) -> u64 {
        name.parse::<Signature>()
            .ok()
            .and_then(|s| self.signature_totals.get(&s).copied())
            .unwrap_or(0)
    }

    pub fn non_socle_dim(&self) -> u64 {
        self.total - self.socle_dim
    }

    pub fn n(&self) -> usize {
        self.ideal.n()
    }

    /// Signature totals in the fixed order of [`Signature::all`].
    pub fn signature_row(&self) -> Vec<(String, u64)> {
        Signature::all(self.n())
            .into_iter()
            .map(|s| {
                let v = self.signature_totals.get(&s).copied().unwrap_or(0);
                (s.to_string(), v)
            })
            .collect()
    }

    pub fn duality_holds(&self) -> bool {
        self.slice_pairs.values().all(|(l, r)| l == r)
    }

    pub fn to_document(&self) -> ReportDocument {
        ReportDocument {
            ideal: self.ideal.to_string(),
            n: self.n(),
            d: self.d,
            total: self.total,
            socle_dim: self.socle_dim,
            signatures: self.signature_row().into_iter().collect(),
            per_degree: self
                .per_degree
                .iter()
                .map(|(a, &v)| (a.0.clone(), v))
                .collect(),
            x_slices: self.x_degree_slices.iter().map(|(&j, &v)| (j, v)).collect(),
            duality_pairs: self
                .slice_pairs
                .iter()
                .map(|(&(i, j), &(l, r))| (i, j, l, r))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("report serializes")
    }
}

/// Stable JSON form of a [`TangentReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub ideal: String,
    pub n: usize,
    pub d: u64,
    pub total: u64,
    pub socle_dim: u64,
    pub signatures: BTreeMap<String, u64>,
    pub per_degree: Vec<(Vec<i64>, u64)>,
    pub x_slices: Vec<(i64, u64)>,
    pub duality_pairs: Vec<(usize, usize, u64, u64)>,
}

pub fn tangent_report(ideal: &MonomialIdeal) -> Result<TangentReport> {
    let n = ideal.n();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "tangent reports need at least two variables".into(),
        ));
    }
    let stairs = Staircase::new(ideal)?;
    let mut search = ComponentSearch::new(&stairs);

    let mut per_degree = BTreeMap::new();
    let mut signature_totals: BTreeMap<Signature, u64> =
        Signature::all(n).into_iter().map(|s| (s, 0)).collect();
    let mut x_degree_slices = BTreeMap::new();
    let mut total = 0;
    let mut singletons = 0;

    for alpha in candidate_degrees(ideal, &stairs) {
        let count = search.count(alpha.coords());
        let Some(sig) = alpha.signature() else {
            debug_assert_eq!(count.bounded, 0, "constant signature {alpha} contributes");
            continue;
        };
        if count.bounded == 0 {
            continue;
        }
        total += count.bounded;
        singletons += count.singletons;
        *signature_totals.get_mut(&sig).expect("all signatures present") += count.bounded;
        *x_degree_slices.entry(alpha.0[0]).or_insert(0) += count.bounded;
        per_degree.insert(alpha, count.bounded);
    }

    let socle_dim = ideal.num_generators() as u64 * stairs.socle().len() as u64;
    assert_eq!(
        socle_dim, singletons,
        "socle maps disagree with singleton components for {ideal}"
    );

    let slice_pairs = if n == 3 {
        duality_pairs_from(ideal, &per_degree)?
    } else {
        BTreeMap::new()
    };

    let report = TangentReport {
        ideal: ideal.clone(),
        d: stairs.colength() as u64,
        per_degree,
        signature_totals,
        total,
        socle_dim,
        singleton_components: singletons,
        x_degree_slices,
        slice_pairs,
    };
    debug_assert!(report.duality_holds(), "slice duality fails for {ideal}");
    Ok(report)
}

fn duality_pairs_from(
    ideal: &MonomialIdeal,
    per_degree: &BTreeMap<MultiDegree, u64>,
) -> Result<BTreeMap<(usize, usize), (u64, u64)>> {
    let table = z_slice_table(ideal, [0, 1, 2])?;
    let mut planes: BTreeMap<(i64, i64), u64> = BTreeMap::new();
    for (a, &v) in per_degree {
        *planes.entry((a.0[0], a.0[1])).or_insert(0) += v;
    }
    let (rows, cols) = table.shape();
    let mut out = BTreeMap::new();
    for i in 0..rows {
        for j in 0..cols {
            let lhs = planes.get(&(i as i64, j as i64)).copied().unwrap_or(0);
            let mirrored = planes
                .get(&(-(i as i64) - 1, -(j as i64) - 1))
                .copied()
                .unwrap_or(0);
            out.insert((i, j), (lhs, table.get(i, j) as u64 + mirrored));
        }
    }
    Ok(out)
}

/// The slice duality pairs of a 3-variable ideal.
pub fn duality_slice_pairs(ideal: &MonomialIdeal) -> Result<BTreeMap<(usize, usize), (u64, u64)>> {
    if ideal.n() != 3 {
        return Err(Error::InvalidParameter(format!(
            "slice duality needs 3 variables, got {}",
            ideal.n()
        )));
    }
    Ok(tangent_report(ideal)?.slice_pairs)
}

/// `dim soc(T(I)) = numgens(I) * dim soc(S/I)`, cross-checked against the
/// number of single-point bounded components.
pub fn socle_tangent_dim(ideal: &MonomialIdeal) -> Result<u64> {
    let report = tangent_report(ideal)?;
    Ok(report.socle_dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{lex_truncation_ideal, power_ideal};

    #[test]
    fn maximal_ideal() {
        let m = power_ideal(3, 1).unwrap();
        let rep = tangent_report(&m).unwrap();
        assert_eq!(rep.total, 3);
        assert_eq!(rep.d, 1);
        for (name, want) in [("ppn", 1), ("pnp", 1), ("npp", 1), ("pnn", 0), ("npn", 0), ("nnp", 0)] {
            assert_eq!(rep.sig(name), want, "{name}");
        }
        let keys: Vec<Vec<i64>> = rep.per_degree.keys().map(|a| a.0.clone()).collect();
        assert_eq!(keys, vec![vec![-1, 0, 0], vec![0, -1, 0], vec![0, 0, -1]]);
    }

    #[test]
    fn totals_are_consistent() {
        let e = lex_truncation_ideal(16).unwrap();
        let rep = tangent_report(&e).unwrap();
        assert_eq!(rep.total, rep.per_degree.values().sum::<u64>());
        assert_eq!(rep.total, rep.signature_totals.values().sum::<u64>());
        assert_eq!(rep.total, rep.x_degree_slices.values().sum::<u64>());
        assert!(rep.socle_dim <= rep.total);
        assert!(rep.per_degree.keys().all(|a| a.signature().is_some()));
    }

    #[test]
    fn lex_sixteen_values() {
        let rep = tangent_report(&lex_truncation_ideal(16).unwrap()).unwrap();
        assert_eq!(rep.total, 84);
        assert_eq!(rep.socle_dim, 77);
        assert_eq!(rep.non_socle_dim(), 7);
    }

    #[test]
    fn fat_point_is_all_socle() {
        for r in 1..5 {
            let rep = tangent_report(&power_ideal(3, r).unwrap()).unwrap();
            assert_eq!(rep.socle_dim, rep.total);
        }
    }

    #[test]
    fn document_shape() {
        let rep = tangent_report(&power_ideal(3, 1).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(v["total"], 3);
        assert_eq!(v["n"], 3);
        assert_eq!(v["signatures"]["ppn"], 1);
        assert_eq!(v["per_degree"][0][0], serde_json::json!([-1, 0, 0]));
        assert_eq!(v["duality_pairs"][0], serde_json::json!([0, 0, 1, 1]));
        let back: ReportDocument = serde_json::from_value(v).unwrap();
        assert_eq!(back, rep.to_document());
    }

    #[test]
    fn one_variable_is_rejected() {
        let i = MonomialIdeal::from_rows(1, &[&[3]]).unwrap();
        assert!(tangent_report(&i).is_err());
    }

    #[test]
    fn duality_example_maximal_ideal() {
        // (0,0): lhs = dim at α=(0,0,-1) = 1, rhs = b_00 + 0 = 1
        let pairs = duality_slice_pairs(&power_ideal(3, 1).unwrap()).unwrap();
        assert_eq!(pairs.get(&(0, 0)), Some(&(1, 1)));
    }
}
