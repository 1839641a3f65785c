use rayon::prelude::*;
use serde::Serialize;

use indforest::generators::{gen_tightness, TightnessParams};
use indforest::greedy::greedy_supertree;
use indforest::{contains_induced, Error};

#[derive(Debug, Serialize)]
pub struct RatioRow {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub greedy: usize,
    pub known: usize,
    pub ratio: f64,
    /// `4a / known`, the guaranteed floor for the measured ratio.
    pub floor: f64,
    pub verified: bool,
}

/// Greedy order against the known supertree of the tightness family for
/// each `a`. Rows come back in the order of `a_values`.
pub fn ratio_sweep(a_values: &[usize], b: usize, c: usize) -> Result<Vec<RatioRow>, Error> {
    a_values
        .par_iter()
        .map(|&a| {
            let fam = gen_tightness(TightnessParams { a, b, c })?;
            let inputs = fam.inputs();
            let known = &fam.known_supertree.tree;
            let (g, _) = greedy_supertree(&inputs)?;
            let mut verified = g.verify(&inputs);
            for t in &inputs {
                verified &= contains_induced(t, known)?.is_some();
            }
            Ok(RatioRow {
                a,
                b,
                c,
                greedy: g.order(),
                known: known.order(),
                ratio: g.order() as f64 / known.order() as f64,
                floor: (4 * a) as f64 / known.order() as f64,
                verified,
            })
        })
        .collect()
}

pub fn to_csv(rows: &[RatioRow]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
