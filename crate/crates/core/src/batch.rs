//! Batch construction and verification over parameter grids, with a rayon
//! data-parallel path (feature `parallel`) and a sequential fallback.

use crate::irreps::{build, full_report, Family, IrrepError, Params, RelationReport, Representation};
use crate::scalars::{FieldSpec, Scalar};

/// One family/parameter choice.
#[derive(Clone, Debug)]
pub struct GridCell {
    pub family: Family,
    pub params: Params,
    pub field: FieldSpec,
}

impl GridCell {
    pub fn build(&self) -> Result<Representation, IrrepError> {
        build(self.family, &self.params, self.field)
    }

    /// Arguments for `sl2q build` reproducing this cell.
    pub fn cli_args(&self) -> Vec<String> {
        let p = &self.params;
        let mut args = vec!["build".to_string(), "--family".to_string(), self.family.to_string()];
        if let Some(n) = p.n {
            args.push(format!("--n={n}"));
        }
        match (p.big_n, self.field) {
            (Some(n), _) | (None, FieldSpec::RootOfUnity(n)) => args.push(format!("--N={n}")),
            _ => {}
        }
        if let Some(e) = p.eps {
            args.push(format!("--eps={e}"));
        }
        if let Some(mu) = &p.mu {
            args.push(format!("--mu={mu}"));
        }
        if let Some(c) = &p.c {
            args.push(format!("--c={c}"));
        }
        args
    }

    pub fn label(&self) -> String {
        self.cli_args()[2..].join(" ")
    }
}

fn cell(family: Family, field: FieldSpec, params: Params) -> GridCell {
    GridCell { family, params, field }
}

fn int(k: i64, f: FieldSpec) -> Scalar {
    Scalar::from_int(k, f)
}

/// First `(μ, c)` among a few candidates for which the truncated Verma
/// module at `N` is irreducible (and satisfies the restriction if asked).
pub fn admissible_root_weight(big_n: u32, restricted: bool) -> Option<(Scalar, Scalar)> {
    let f = FieldSpec::root_of_unity(big_n).ok()?;
    let candidates: Vec<(Scalar, Scalar)> = if restricted {
        // With x = λμ/q the restriction is the conic c² − λxc − x² = 1; lines
        // c = 1 + tx through (0, 1) give x = (λ − 2t)/(t² − λt − 1).
        let lam = Scalar::lambda(f);
        let q_over_lam = Scalar::q(f).div(&lam).ok()?;
        [1, 2, -1, 3, -2]
            .into_iter()
            .filter_map(|t| {
                let t = int(t, f);
                let x = (&lam - &(&t * &int(2, f))).div(&(&t * &t - &lam * &t - int(1, f))).ok()?;
                Some((&q_over_lam * &x, int(1, f) + &t * &x))
            })
            .collect()
    } else {
        [(1, 3), (2, 5), (1, 7), (-1, 3)].into_iter().map(|(m, c)| (int(m, f), int(c, f))).collect()
    };
    let family = if restricted { Family::TLLambdaN } else { Family::LLambdaN };
    candidates.into_iter().find(|(mu, c)| {
        let p = Params { big_n: Some(big_n), mu: Some(mu.clone()), c: Some(c.clone()), ..Params::default() };
        build(family, &p, f).is_ok()
    })
}

/// The parameter grid used by the acceptance suite and the benchmark.
pub fn standard_grid() -> Vec<GridCell> {
    let g = FieldSpec::Generic;
    let root = |n: u32| FieldSpec::RootOfUnity(n);
    let mut out = Vec::new();
    for n in 1..=10 {
        for c in [1, 2] {
            out.push(cell(Family::LnC, g, Params { n: Some(n), c: Some(int(c, g)), ..Params::default() }));
        }
    }
    for mu in ["0", "1", "-3/2"] {
        let mu = crate::scalars::parse_scalar(mu, g).expect("literal");
        out.push(cell(Family::LMu, g, Params { mu: Some(mu), ..Params::default() }));
    }
    for n in 1..=10 {
        for eps in [1, -1] {
            out.push(cell(Family::TLnEps, g, Params { n: Some(n), eps: Some(eps), ..Params::default() }));
        }
    }
    for big_n in [3, 4, 5, 6] {
        for (family, restricted) in [(Family::LLambdaN, false), (Family::TLLambdaN, true)] {
            let (mu, c) = admissible_root_weight(big_n, restricted).unwrap_or_else(|| (int(1, root(big_n)), int(3, root(big_n))));
            out.push(cell(family, root(big_n), Params { big_n: Some(big_n), mu: Some(mu), c: Some(c), ..Params::default() }));
        }
    }
    for big_n in [3, 5] {
        for n in 1..big_n {
            let p = Params { n: Some(n), big_n: Some(big_n), c: Some(int(1, root(big_n))), ..Params::default() };
            out.push(cell(Family::LnCN, root(big_n), p));
        }
    }
    for big_n in [4, 6] {
        for mu in [1, 3] {
            let p = Params { big_n: Some(big_n), mu: Some(int(mu, root(big_n))), ..Params::default() };
            out.push(cell(Family::LMuNtilde, root(big_n), p));
        }
    }
    for n in 1..=4 {
        for eps in [1, -1] {
            out.push(cell(Family::TLnEpsN, root(5), Params { n: Some(n), big_n: Some(5), eps: Some(eps), ..Params::default() }));
        }
    }
    for big_n in [4, 8] {
        for eps in [1, -1] {
            out.push(cell(Family::TLEpsNtilde, root(big_n), Params { big_n: Some(big_n), eps: Some(eps), ..Params::default() }));
        }
    }
    out
}

pub type CellOutcome = Result<RelationReport, IrrepError>;

fn check_cell(c: &GridCell) -> CellOutcome {
    c.build().map(|rep| full_report(&rep))
}

pub fn verify_grid_seq(cells: &[GridCell]) -> Vec<CellOutcome> {
    cells.iter().map(check_cell).collect()
}

#[cfg(feature = "parallel")]
pub fn verify_grid_par(cells: &[GridCell]) -> Vec<CellOutcome> {
    use rayon::prelude::*;
    cells.par_iter().map(check_cell).collect()
}

/// Parallel when the `parallel` feature is enabled.
pub fn verify_grid(cells: &[GridCell]) -> Vec<CellOutcome> {
    #[cfg(feature = "parallel")]
    {
        verify_grid_par(cells)
    }
    #[cfg(not(feature = "parallel"))]
    {
        verify_grid_seq(cells)
    }
}

pub fn verify_all_seq(reps: &[Representation]) -> Vec<RelationReport> {
    reps.iter().map(full_report).collect()
}

#[cfg(feature = "parallel")]
pub fn verify_all_par(reps: &[Representation]) -> Vec<RelationReport> {
    use rayon::prelude::*;
    reps.par_iter().map(full_report).collect()
}

pub fn verify_all(reps: &[Representation]) -> Vec<RelationReport> {
    #[cfg(feature = "parallel")]
    {
        verify_all_par(reps)
    }
    #[cfg(not(feature = "parallel"))]
    {
        verify_all_seq(reps)
    }
}
