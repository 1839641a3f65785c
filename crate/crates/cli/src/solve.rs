use serde_json::{json, Map, Value};

use indforest::exact3::{exact3_supertree, Exact3Options};
use indforest::greedy::greedy_supertree;
use indforest::oracle::{oracle_max_subforest, oracle_min_superforest_in, HostClass, OracleBudget};
use indforest::pairwise::{mcs_trees, supertree2};
use indforest::ptas::{ptas_subforest, PtasOptions};
use indforest::{contains_induced, Error, Forest};

/// One embedding the verifier re-checks.
pub struct Check {
    pub label: String,
    pub pattern: Forest,
    pub host: Forest,
    pub map: Vec<usize>,
}

/// A solver answer before verification.
pub struct Solved {
    pub order: usize,
    pub result: Forest,
    pub fields: Map<String, Value>,
    pub checks: Vec<Check>,
    pub must_be_tree: bool,
    pub max_component: Option<usize>,
}

impl Solved {
    fn new(order: usize, result: Forest) -> Self {
        Solved {
            order,
            result,
            fields: Map::new(),
            checks: Vec::new(),
            must_be_tree: false,
            max_component: None,
        }
    }

    /// Inputs embedded into the result.
    fn inputs_into_result(&mut self, inputs: &[Forest], maps: Vec<Vec<usize>>) {
        for (i, (f, m)) in inputs.iter().zip(maps).enumerate() {
            self.checks.push(Check {
                label: format!("input {i}"),
                pattern: f.clone(),
                host: self.result.clone(),
                map: m,
            });
        }
    }

    /// The result embedded into every input.
    fn result_into_inputs(&mut self, inputs: &[Forest], maps: Vec<Vec<usize>>) {
        for (i, (f, m)) in inputs.iter().zip(maps).enumerate() {
            self.checks.push(Check {
                label: format!("input {i}"),
                pattern: self.result.clone(),
                host: f.clone(),
                map: m,
            });
        }
    }

    fn set(&mut self, key: &str, value: impl serde::Serialize) {
        self.fields
            .insert(key.into(), serde_json::to_value(value).expect("serializable"));
    }
}

fn need(forests: &[Forest], count: usize, what: &str) -> Result<(), Error> {
    if forests.len() != count {
        return Err(Error::InvalidInstance(format!(
            "{what} takes exactly {count} trees, got {}",
            forests.len()
        )));
    }
    Ok(())
}

pub fn mcs2(forests: &[Forest]) -> Result<Solved, Error> {
    need(forests, 2, "mcs2")?;
    let r = mcs_trees(&forests[0], &forests[1])?;
    let mut s = Solved::new(r.size, r.common);
    s.must_be_tree = r.size > 0;
    s.result_into_inputs(forests, vec![r.embed1.map().to_vec(), r.embed2.map().to_vec()]);
    Ok(s)
}

pub fn super2(forests: &[Forest]) -> Result<Solved, Error> {
    need(forests, 2, "super2")?;
    let r = supertree2(&forests[0], &forests[1])?;
    let mut s = Solved::new(r.tree.order(), r.tree);
    s.must_be_tree = true;
    s.set("commonSize", r.common_size);
    s.inputs_into_result(forests, vec![r.embed1.map().to_vec(), r.embed2.map().to_vec()]);
    Ok(s)
}

pub fn greedy(forests: &[Forest], known: Option<&Forest>) -> Result<Solved, Error> {
    let (r, trace) = greedy_supertree(forests)?;
    let mut s = Solved::new(r.order(), r.tree.clone());
    s.must_be_tree = true;
    s.set("trace", &trace);
    s.set("bound", format!("{}/{}", trace.bound.numer(), trace.bound.denom()));
    if let Some(k) = known {
        let mut verified = true;
        for f in forests {
            verified &= contains_induced(f, k)?.is_some();
        }
        s.set("knownOrder", k.order());
        s.set("knownVerified", verified);
        if verified && k.order() > 0 {
            s.set("ratioLowerBound", r.order() as f64 / k.order() as f64);
            s.set("ratioLowerBoundExact", format!("{}/{}", r.order(), k.order()));
        }
    }
    s.inputs_into_result(forests, r.embeddings.iter().map(|e| e.map().to_vec()).collect());
    Ok(s)
}

pub fn exact3(forests: &[Forest], partition_cap: usize) -> Result<Solved, Error> {
    need(forests, 3, "exact3")?;
    let opts = Exact3Options { partition_cap };
    let r = exact3_supertree(&forests[0], &forests[1], &forests[2], &opts)?;
    let mut s = Solved::new(r.order, r.supertree.tree.clone());
    s.must_be_tree = true;
    s.set("type", r.kind);
    s.set("stats", &r.stats);
    s.inputs_into_result(
        forests,
        r.supertree.embeddings.iter().map(|e| e.map().to_vec()).collect(),
    );
    Ok(s)
}

pub fn ptas(forests: &[Forest], epsilon: f64, opts: &PtasOptions) -> Result<Solved, Error> {
    let r = ptas_subforest(forests, epsilon, opts)?;
    let mut s = Solved::new(r.order, r.forest.clone());
    s.max_component = Some(r.delta_used);
    s.set("deltaUsed", r.delta_used);
    s.set("requestedDelta", r.requested_delta);
    s.set("guarantee", r.guarantee);
    s.set("bestVector", &r.best_vector);
    s.result_into_inputs(forests, r.embeddings.iter().map(|e| e.map().to_vec()).collect());
    Ok(s)
}

pub fn oracle_sub(forests: &[Forest], budget: &OracleBudget) -> Result<Solved, Error> {
    let r = oracle_max_subforest(forests, budget)?;
    let mut s = Solved::new(r.order, r.forest.clone());
    s.result_into_inputs(forests, r.embeddings.iter().map(|e| e.map().to_vec()).collect());
    Ok(s)
}

pub fn oracle_super(
    forests: &[Forest],
    budget: &OracleBudget,
    class: HostClass,
) -> Result<Solved, Error> {
    let r = oracle_min_superforest_in(forests, budget, class)?;
    let mut s = Solved::new(r.order, r.forest.clone());
    s.must_be_tree = !forests.is_empty() && forests.iter().all(Forest::is_tree);
    s.set("hosts", if class == HostClass::Forests { "forests" } else { "auto" });
    s.inputs_into_result(forests, r.embeddings.iter().map(|e| e.map().to_vec()).collect());
    Ok(s)
}

/// Damages the answer so that verification must reject it.
pub fn corrupt(s: &mut Solved) {
    match s.checks.iter_mut().find(|c| !c.map.is_empty()) {
        Some(c) if c.map.len() >= 2 => c.map[0] = c.map[1],
        Some(c) => c.map[0] = c.host.order(),
        None => s.order += 1,
    }
}

pub fn result_json(s: &Solved) -> Value {
    json!({
        "forest": s.result,
        "embeddings": s.checks.iter().map(|c| &c.map).collect::<Vec<_>>(),
    })
}
