//! Row assembly for the `enumerate` and `table` subcommands.

use num_bigint::BigUint;
use rayon::prelude::*;

use igrass::classify::{anticanonical, build, fano_status_by_criterion, FanoStatus, TypedVariety};
use igrass::grading::Weight;
use igrass::hilbert::h0_anticanonical;
use igrass::{Error, Result};

pub struct Row {
    pub no: usize,
    pub variety: TypedVariety,
    pub matrix: (Vec<i64>, Vec<i64>),
    pub antican: Weight,
    pub fano: FanoStatus,
    pub h0: Option<BigUint>,
}

/// Builds display rows in canonical order; h⁰ computations are fanned out
/// over a thread pool when `jobs > 1`, results re-emitted in input order.
pub fn build_rows(
    varieties: Vec<TypedVariety>,
    with_h0: bool,
    jobs: Option<usize>,
) -> Result<Vec<Row>> {
    let h0s: Vec<Option<BigUint>> = if with_h0 {
        match jobs {
            Some(j) if j > 1 => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| Error::InvalidParameter(format!("cannot build thread pool: {e}")))?;
                let computed: Vec<Result<BigUint>> =
                    pool.install(|| varieties.par_iter().map(h0_anticanonical).collect());
                computed
                    .into_iter()
                    .map(|r| r.map(Some))
                    .collect::<Result<Vec<_>>>()?
            }
            _ => varieties
                .iter()
                .map(|v| h0_anticanonical(v).map(Some))
                .collect::<Result<Vec<_>>>()?,
        }
    } else {
        vec![None; varieties.len()]
    };
    varieties
        .into_iter()
        .zip(h0s)
        .enumerate()
        .map(|(i, (v, h0))| {
            let (g, _) = build(&v)?;
            let xs = g.t_weights().iter().map(|w| w.x).collect();
            let ys = g.t_weights().iter().map(|w| w.y).collect();
            Ok(Row {
                no: i + 1,
                antican: anticanonical(&g)?,
                fano: fano_status_by_criterion(&v)?,
                matrix: (xs, ys),
                variety: v,
                h0,
            })
        })
        .collect()
}
