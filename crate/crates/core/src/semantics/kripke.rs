use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::boolean::require_propositional;
use super::SemanticsError;
use crate::syntax::{BinOp, Formula, View};

/// A finite intuitionistic Kripke model. World 0 is the root of every
/// model produced by this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KripkeModel {
    worlds: Vec<String>,
    /// `le[i][j]` iff world `i` is below world `j`; reflexive and transitive.
    le: Vec<Vec<bool>>,
    /// Printed atoms true at each world.
    valuation: Vec<BTreeSet<String>>,
}

impl KripkeModel {
    /// Builds a model from an order given by generating pairs; the
    /// reflexive-transitive closure is taken. Fails if the valuation is
    /// not monotone along the order.
    pub fn new(
        worlds: Vec<String>,
        order: &[(usize, usize)],
        valuation: Vec<BTreeSet<String>>,
    ) -> Result<KripkeModel, SemanticsError> {
        let n = worlds.len();
        if n == 0 {
            return Err(SemanticsError::InvalidModel("a model needs at least one world".into()));
        }
        if valuation.len() != n {
            return Err(SemanticsError::InvalidModel("one atom set per world is required".into()));
        }
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in order {
            if i >= n || j >= n {
                return Err(SemanticsError::InvalidModel(format!("order pair ({i}, {j}) names a missing world")));
            }
            le[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    let via = le[k].clone();
                    for (j, reach) in via.into_iter().enumerate() {
                        le[i][j] |= reach;
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if le[i][j] && !valuation[i].is_subset(&valuation[j]) {
                    return Err(SemanticsError::InvalidModel(format!(
                        "valuation is not monotone from {} to {}",
                        worlds[i], worlds[j]
                    )));
                }
            }
        }
        Ok(KripkeModel { worlds, le, valuation })
    }

    pub fn world_count(&self) -> usize {
        self.worlds.len()
    }

    pub fn world_names(&self) -> &[String] {
        &self.worlds
    }

    pub fn world_index(&self, name: &str) -> Option<usize> {
        self.worlds.iter().position(|w| w == name)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    pub fn atoms_at(&self, w: usize) -> &BTreeSet<String> {
        &self.valuation[w]
    }

    /// Worlds forcing `f`, one flag per world.
    pub fn forcing_set(&self, f: &Formula) -> Result<Vec<bool>, SemanticsError> {
        require_propositional(f)?;
        Ok(self.force_rec(f))
    }

    fn force_rec(&self, f: &Formula) -> Vec<bool> {
        let n = self.worlds.len();
        // `w` forces an implication when every successor forcing `a` forces `b`
        let arrow = |a: &[bool], b: &[bool]| -> Vec<bool> {
            (0..n).map(|w| (0..n).all(|v| !self.le[w][v] || !a[v] || b[v])).collect()
        };
        match f.view() {
            View::Atom(..) => {
                let key = f.to_string();
                self.valuation.iter().map(|s| s.contains(&key)).collect()
            }
            View::Const(Formula::Top) => vec![true; n],
            View::Const(_) => vec![false; n],
            View::Unary { arg, .. } => arrow(&self.force_rec(arg), &vec![false; n]),
            View::Binary(op, a, b) => {
                let (fa, fb) = (self.force_rec(a), self.force_rec(b));
                match op {
                    BinOp::And => fa.iter().zip(&fb).map(|(x, y)| *x && *y).collect(),
                    BinOp::Or => fa.iter().zip(&fb).map(|(x, y)| *x || *y).collect(),
                    _ => arrow(&fa, &fb),
                }
            }
            View::Quant(..) => unreachable!("checked propositional"),
        }
    }

    pub fn to_json(&self) -> KripkeJson {
        let n = self.worlds.len();
        let mut order = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.le[i][j] {
                    order.push([self.worlds[i].clone(), self.worlds[j].clone()]);
                }
            }
        }
        KripkeJson {
            worlds: self.worlds.clone(),
            order,
            valuation: self
                .worlds
                .iter()
                .zip(&self.valuation)
                .map(|(w, atoms)| (w.clone(), atoms.iter().cloned().collect()))
                .collect(),
        }
    }

    pub fn from_json(doc: &KripkeJson) -> Result<KripkeModel, SemanticsError> {
        let index = |name: &str| {
            doc.worlds
                .iter()
                .position(|w| w == name)
                .ok_or_else(|| SemanticsError::InvalidModel(format!("unknown world `{name}`")))
        };
        let order = doc
            .order
            .iter()
            .map(|[a, b]| Ok((index(a)?, index(b)?)))
            .collect::<Result<Vec<_>, SemanticsError>>()?;
        for w in doc.valuation.keys() {
            index(w)?;
        }
        let valuation = doc
            .worlds
            .iter()
            .map(|w| doc.valuation.get(w).map(|xs| xs.iter().cloned().collect()).unwrap_or_default())
            .collect();
        KripkeModel::new(doc.worlds.clone(), &order, valuation)
    }
}

/// Serialized form: `{"worlds": [..], "order": [[w, w'], ..], "valuation": {w: [atom, ..]}}`.
/// The order lists every pair of the reflexive-transitive relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KripkeJson {
    pub worlds: Vec<String>,
    pub order: Vec<[String; 2]>,
    pub valuation: BTreeMap<String, Vec<String>>,
}

pub fn kripke_forces(m: &KripkeModel, w: usize, f: &Formula) -> Result<bool, SemanticsError> {
    if w >= m.world_count() {
        return Err(SemanticsError::InvalidModel(format!("world index {w} out of range")));
    }
    Ok(m.forcing_set(f)?[w])
}

/// Searches rooted partial orders of up to `max_worlds` worlds, smallest
/// first, for a model whose root does not force `f`. Worlds are labelled
/// so that `i <= j` implies `i` is numbered no later than `j`; world 0 is
/// the root. Valuations range over the atoms of `f` and are enumerated
/// in counting order.
pub fn find_kripke_countermodel(f: &Formula, max_worlds: usize) -> Result<Option<KripkeModel>, SemanticsError> {
    require_propositional(f)?;
    assert!(max_worlds >= 1, "max_worlds must be at least 1");
    assert!(max_worlds <= 12, "countermodel enumeration is limited to 12 worlds");
    let atoms = f.atoms();
    let plan = MaskFormula::compile(f, &atoms);
    for n in 1..=max_worlds {
        for up in rooted_orders(n) {
            let mut vals = vec![0u32; n];
            if let Some(found) = search_valuations(&plan, &up, atoms.len(), &mut vals, 0) {
                let worlds = (0..n).map(|i| format!("w{i}")).collect();
                let order: Vec<(usize, usize)> = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| up[i] >> j & 1 == 1)
                    .collect();
                let valuation = found
                    .iter()
                    .map(|&bits| {
                        atoms.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, a)| a.to_string()).collect()
                    })
                    .collect();
                return Ok(Some(KripkeModel::new(worlds, &order, valuation)?));
            }
        }
    }
    Ok(None)
}

/// Upward closures (`up[i]` = worlds above `i`, as a bit mask) of every
/// transitive relation on `0..n` that puts 0 below everything and only
/// relates lower indices to higher ones.
fn rooted_orders(n: usize) -> Vec<Vec<u32>> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for choice in 0u64..(1u64 << pairs.len()) {
        let mut up: Vec<u32> = (0..n).map(|i| 1 << i).collect();
        up[0] = (1u32 << n) - 1;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if choice >> k & 1 == 1 {
                up[i] |= 1 << j;
            }
        }
        let transitive = (0..n).all(|i| (0..n).all(|j| up[i] >> j & 1 == 0 || up[j] & !up[i] == 0));
        if transitive {
            out.push(up);
        }
    }
    out
}

fn search_valuations(plan: &MaskFormula, up: &[u32], atom_count: usize, vals: &mut Vec<u32>, w: usize) -> Option<Vec<u32>> {
    let n = up.len();
    if w == n {
        let forced = plan.eval(up, vals);
        return if forced & 1 == 0 { Some(vals.clone()) } else { None };
    }
    // monotone: everything true below `w` stays true at `w`
    let inherited = (0..w).filter(|&i| up[i] >> w & 1 == 1).fold(0u32, |acc, i| acc | vals[i]);
    for bits in 0u32..(1u32 << atom_count) {
        if bits & inherited != inherited {
            continue;
        }
        vals[w] = bits;
        if let Some(found) = search_valuations(plan, up, atom_count, vals, w + 1) {
            return Some(found);
        }
    }
    None
}

/// A propositional formula compiled for evaluation over world bit masks.
enum MaskFormula {
    Atom(usize),
    Top,
    Bot,
    Not(Box<MaskFormula>),
    And(Box<MaskFormula>, Box<MaskFormula>),
    Or(Box<MaskFormula>, Box<MaskFormula>),
    Imp(Box<MaskFormula>, Box<MaskFormula>),
}

impl MaskFormula {
    fn compile(f: &Formula, atoms: &[Formula]) -> MaskFormula {
        let c = |g: &Formula| Box::new(MaskFormula::compile(g, atoms));
        match f.view() {
            View::Atom(..) => MaskFormula::Atom(atoms.iter().position(|a| a == f).expect("atom collected")),
            View::Const(Formula::Top) => MaskFormula::Top,
            View::Const(_) => MaskFormula::Bot,
            View::Unary { arg, .. } => MaskFormula::Not(c(arg)),
            View::Binary(BinOp::And, a, b) => MaskFormula::And(c(a), c(b)),
            View::Binary(BinOp::Or, a, b) => MaskFormula::Or(c(a), c(b)),
            View::Binary(_, a, b) => MaskFormula::Imp(c(a), c(b)),
            View::Quant(..) => unreachable!("checked propositional"),
        }
    }

    /// Mask of worlds forcing the formula.
    fn eval(&self, up: &[u32], vals: &[u32]) -> u32 {
        let n = up.len();
        let all = (1u32 << n) - 1;
        let arrow = |a: u32, b: u32| (0..n).filter(|&w| up[w] & a & !b == 0).fold(0u32, |m, w| m | 1 << w);
        match self {
            MaskFormula::Atom(k) => (0..n).filter(|&w| vals[w] >> k & 1 == 1).fold(0, |m, w| m | 1 << w),
            MaskFormula::Top => all,
            MaskFormula::Bot => 0,
            MaskFormula::Not(a) => arrow(a.eval(up, vals), 0),
            MaskFormula::And(a, b) => a.eval(up, vals) & b.eval(up, vals),
            MaskFormula::Or(a, b) => a.eval(up, vals) | b.eval(up, vals),
            MaskFormula::Imp(a, b) => arrow(a.eval(up, vals), b.eval(up, vals)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn chain() -> KripkeModel {
        KripkeModel::new(
            vec!["w0".into(), "w1".into()],
            &[(0, 1)],
            vec![BTreeSet::new(), BTreeSet::from(["P".to_string()])],
        )
        .unwrap()
    }

    #[test]
    fn excluded_middle_fails_at_the_root_of_a_chain() {
        // w0 forces neither P (not true there) nor ~P (P holds at w1)
        let m = chain();
        assert!(!kripke_forces(&m, 0, &p("P \\/ ~P")).unwrap());
        assert!(kripke_forces(&m, 1, &p("P \\/ ~P")).unwrap());
        assert!(kripke_forces(&m, 0, &p("~~P")).unwrap());
    }

    #[test]
    fn top_is_forced_everywhere() {
        let m = chain();
        assert!(kripke_forces(&m, 0, &p("T")).unwrap() && kripke_forces(&m, 1, &p("T")).unwrap());
    }

    #[test]
    fn forcing_is_monotone() {
        let m = chain();
        for f in ["P", "~P", "P => Q", "~~P \\/ ~P"] {
            let set = m.forcing_set(&p(f)).unwrap();
            assert!(!set[0] || set[1], "{f}");
        }
    }

    #[test]
    fn non_monotone_valuation_is_rejected() {
        let bad = KripkeModel::new(
            vec!["a".into(), "b".into()],
            &[(0, 1)],
            vec![BTreeSet::from(["P".to_string()]), BTreeSet::new()],
        );
        assert!(matches!(bad, Err(SemanticsError::InvalidModel(_))));
    }

    #[test]
    fn countermodel_for_excluded_middle_is_the_chain() {
        let m = find_kripke_countermodel(&p("P \\/ ~P"), 2).unwrap().unwrap();
        assert_eq!(m, chain());
        assert!(find_kripke_countermodel(&p("P \\/ ~P"), 1).unwrap().is_none());
    }

    #[test]
    fn countermodel_for_after_only_excluded_middle() {
        let f = p("~~P \\/ ~~~~~P");
        let m = find_kripke_countermodel(&f, 4).unwrap().expect("has no constructive proof");
        assert!(!kripke_forces(&m, 0, &f).unwrap());
    }

    #[test]
    fn no_countermodel_for_top() {
        assert!(find_kripke_countermodel(&p("T"), 3).unwrap().is_none());
        assert!(find_kripke_countermodel(&p("~~(P \\/ ~P)"), 4).unwrap().is_none());
    }

    #[test]
    fn json_round_trip() {
        let m = chain();
        let doc = m.to_json();
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            r#"{"worlds":["w0","w1"],"order":[["w0","w0"],["w0","w1"],["w1","w1"]],"valuation":{"w0":[],"w1":["P"]}}"#
        );
        assert_eq!(KripkeModel::from_json(&doc).unwrap(), m);
    }

    #[test]
    fn rooted_order_counts() {
        assert_eq!(rooted_orders(1).len(), 1);
        assert_eq!(rooted_orders(2).len(), 1);
        assert_eq!(rooted_orders(3).len(), 2);
    }
}
