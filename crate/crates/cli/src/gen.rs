use serde_json::{json, Value};

use indforest::forest::random::{random_forest_with, random_tree_max_degree, rng_from_seed, ComponentProfile};
use indforest::generators::{
    caterpillar, gen_prop1, gen_thm1, gen_tightness, ThreeDmInstance, ThreePartitionInstance,
    TightnessParams,
};
use indforest::{Error, Forest};

use crate::GenCommand;

/// Named forests plus a metadata sidecar.
pub struct Generated {
    pub family: &'static str,
    pub forests: Vec<(String, Forest)>,
    pub meta: Value,
}

fn parse_triples(text: &str) -> Result<Vec<(usize, usize, usize)>, Error> {
    text.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let v: Vec<usize> = t
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|e| Error::InvalidInstance(format!("triple '{t}': {e}")))?;
            match v[..] {
                [x, y, z] => Ok((x, y, z)),
                _ => Err(Error::InvalidInstance(format!("triple '{t}' needs three entries"))),
            }
        })
        .collect()
}

pub fn generate(cmd: &GenCommand, seed: u64) -> Result<Generated, Error> {
    Ok(match cmd {
        GenCommand::Caterpillar { counts } => {
            let c = caterpillar(counts)?;
            Generated {
                family: "caterpillar",
                meta: json!({ "counts": counts, "spine": c.spine, "leaves": c.leaves }),
                forests: vec![("caterpillar".into(), c.tree)],
            }
        }
        GenCommand::Prop1 { values } => {
            let inst = ThreePartitionInstance {
                values: values.clone(),
            };
            let p = gen_prop1(&inst)?;
            Generated {
                family: "prop1",
                meta: json!({
                    "values": values,
                    "m": inst.m(),
                    "target": inst.target(),
                    "r1": p.r1,
                    "r2": p.r2,
                    "branches1": p.branches1,
                    "branches2": p.branches2,
                }),
                forests: vec![("t1".into(), p.t1), ("t2".into(), p.t2)],
            }
        }
        GenCommand::Thm1 {
            q,
            triples,
            matching,
        } => {
            let inst = ThreeDmInstance {
                q: *q,
                triples: parse_triples(triples)?,
            };
            let g = gen_thm1(&inst, matching.as_deref())?;
            let mut forests = vec![
                ("tx".to_string(), g.tx.clone()),
                ("ty".to_string(), g.ty.clone()),
                ("tz".to_string(), g.tz.clone()),
            ];
            if let Some(w) = &g.witness {
                forests.push(("witness".into(), w.clone()));
            }
            Generated {
                family: "thm1",
                meta: json!({
                    "q": q,
                    "triples": inst.triples,
                    "matching": matching,
                    "rX": g.r_x,
                    "rY": g.r_y,
                    "rZ": g.r_z,
                    "xRoots": g.x_roots,
                    "yRoots": g.y_roots,
                    "zRoots": g.z_roots,
                    "witnessLeaves": g.witness_leaves,
                }),
                forests,
            }
        }
        GenCommand::Tightness { a, b, c } => {
            let f = gen_tightness(TightnessParams { a: *a, b: *b, c: *c })?;
            let mut forests: Vec<(String, Forest)> = f
                .trees
                .iter()
                .enumerate()
                .map(|(i, t)| (format!("t{}", i + 1), t.tree.clone()))
                .collect();
            forests.push(("known".into(), f.known_supertree.tree.clone()));
            Generated {
                family: "tightness",
                meta: json!({
                    "a": a,
                    "b": b,
                    "c": c,
                    "spines": f.trees.iter().map(|t| &t.spine).collect::<Vec<_>>(),
                    "knownSpine": f.known_supertree.spine,
                    "knownOrder": f.known_supertree.tree.order(),
                }),
                forests,
            }
        }
        GenCommand::Random {
            order,
            count,
            components,
            max_degree,
        } => {
            let mut rng = rng_from_seed(seed);
            let forests = (0..*count)
                .map(|i| {
                    let f = match (components, max_degree) {
                        (None, Some(d)) => random_tree_max_degree(&mut rng, *order, *d),
                        (Some(k), _) => {
                            random_forest_with(&mut rng, *order, &ComponentProfile::Components(*k))
                        }
                        (None, None) => random_forest_with(&mut rng, *order, &ComponentProfile::Tree),
                    };
                    (format!("random{i}"), f)
                })
                .collect();
            Generated {
                family: "random",
                meta: json!({
                    "order": order,
                    "count": count,
                    "components": components,
                    "maxDegree": max_degree,
                    "seed": seed,
                }),
                forests,
            }
        }
    })
}
