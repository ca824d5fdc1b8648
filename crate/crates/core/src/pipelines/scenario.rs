//! Named inclusions, their depth reports and the claim checks attached to them.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::bimodule::bimodule_mult_matrix;
use super::drinfeld::drinfeld_induction_matrix;
use super::young::young_branching_matrix;
use crate::chars::{induction_matrix, CharacterTable, InductionMatrix};
use crate::depth::{depth_quad, h_depth, DepthQuad};
use crate::exact::{int_to_json, mat_mul, IntMatrix, SparseVec};
use crate::green::h_depth_via_q;
use crate::hopf::{
    drinfeld_double, factorization_algebra, flip_map, generalized_smash, group_algebra, group_pair_quotient,
    heisenberg_double, smash_product, FactorizationAlgebra, ModuleAction, SubalgebraEmbedding,
};
use crate::perm::{is_normal, parse_group_with_cap, parse_subgroup, PermGroup, DEFAULT_ORDER_CAP};
use crate::tensor::DEFAULT_TENSOR_BUDGET;
use crate::{Error, Result};

/// Matrices with more entries than this are summarized in reports.
const MATRIX_EMIT_LIMIT: usize = 40_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_group_order: usize,
    /// bound on dim(X)² for algebras built from structure constants, and on
    /// the ambient dimension of tensor powers
    pub max_tensor_budget: usize,
    pub prime_override: Option<u64>,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_group_order: DEFAULT_ORDER_CAP, max_tensor_budget: DEFAULT_TENSOR_BUDGET, prime_override: None }
    }
}

type TableKey = (usize, Vec<Vec<usize>>, Option<u64>);

/// Character tables keyed by degree and generators.
#[derive(Default)]
pub struct TableCache {
    tables: RwLock<HashMap<TableKey, Arc<CharacterTable>>>,
}

impl TableCache {
    pub fn table(&self, g: &PermGroup, prime: Option<u64>) -> Result<Arc<CharacterTable>> {
        let key = (g.degree(), g.generators().iter().map(|p| p.images()).collect(), prime);
        if let Some(t) = self.tables.read().expect("table cache").get(&key) {
            return Ok(t.clone());
        }
        let t = Arc::new(CharacterTable::compute_with_prime(g, prime)?);
        Ok(self.tables.write().expect("table cache").entry(key).or_insert(t).clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scenario {
    /// An induction matrix given directly; `source` names the file it came from.
    Matrix { matrix: IntMatrix, source: Option<String> },
    /// ℂS_n ⊆ ℂS_{n+1} through Young's rule.
    Sym { n: usize },
    /// kH ⊆ kG.
    Pair { group: String, subgroup: String },
    /// H* ⊆ H # H* for H = kG.
    Heisenberg { group: String },
    /// kG ⊆ D(kG).
    Drinfeld { group: String },
    /// kG ⊆ Q*ᵒᵖ # kG with Q = kG/(kH)⁺kG.
    GenSmash { group: String, subgroup: String },
}

impl Scenario {
    pub fn pair(group: &str, subgroup: &str) -> Self {
        Self::Pair { group: group.into(), subgroup: subgroup.into() }
    }

    pub fn instance(&self) -> String {
        match self {
            Self::Matrix { source: Some(s), .. } => format!("matrix({s})"),
            Self::Matrix { matrix, .. } => format!("matrix({}x{})", matrix.rows(), matrix.cols()),
            Self::Sym { n } => format!("sym({n})"),
            Self::Pair { group, subgroup } => format!("pair({group}, {subgroup})"),
            Self::Heisenberg { group } => format!("heisenberg({group})"),
            Self::Drinfeld { group } => format!("drinfeld({group})"),
            Self::GenSmash { group, subgroup } => format!("gensmash({group}, {subgroup})"),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Self::Matrix { matrix, source } => {
                json!({ "kind": "matrix", "matrix": matrix.to_json(), "source": source })
            }
            Self::Sym { n } => json!({ "kind": "sym", "n": n }),
            Self::Pair { group, subgroup } => json!({ "kind": "pair", "group": group, "subgroup": subgroup }),
            Self::Heisenberg { group } => json!({ "kind": "heisenberg", "group": group }),
            Self::Drinfeld { group } => json!({ "kind": "drinfeld", "group": group }),
            Self::GenSmash { group, subgroup } => json!({ "kind": "gensmash", "group": group, "subgroup": subgroup }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let text = |k: &str| {
            v.get(k)
                .and_then(Value::as_str)
                .map(str::to_string)
                .ok_or_else(|| Error::Parse(format!("scenario field `{k}` missing")))
        };
        let kind = text("kind")?;
        Ok(match kind.as_str() {
            "matrix" => Self::Matrix {
                matrix: IntMatrix::from_json(
                    v.get("matrix").ok_or_else(|| Error::Parse("scenario field `matrix` missing".into()))?,
                )?,
                source: v.get("source").and_then(Value::as_str).map(str::to_string),
            },
            "sym" => Self::Sym {
                n: v.get("n")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::Parse("scenario field `n` missing".into()))? as usize,
            },
            "pair" => Self::Pair { group: text("group")?, subgroup: text("subgroup")? },
            "heisenberg" => Self::Heisenberg { group: text("group")? },
            "drinfeld" => Self::Drinfeld { group: text("group")? },
            "gensmash" => Self::GenSmash { group: text("group")?, subgroup: text("subgroup")? },
            other => return Err(Error::Parse(format!("unknown scenario kind `{other}`"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

/// One audited identity or inequality on one instance. `paper_value` is the
/// value (or statement) asserted in the literature; `lhs` and `rhs` are
/// computed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimVerdict {
    pub id: String,
    pub instance: String,
    pub relation: String,
    pub lhs: Value,
    pub rhs: Value,
    pub paper_value: Value,
    pub verdict: Verdict,
}

impl ClaimVerdict {
    fn new(id: &str, instance: &str, relation: &str, lhs: Value, rhs: Value, paper_value: Value, holds: bool) -> Self {
        Self {
            id: id.into(),
            instance: instance.into(),
            relation: relation.into(),
            lhs,
            rhs,
            paper_value,
            verdict: if holds { Verdict::Pass } else { Verdict::Fail },
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("plain data")
    }
}

fn chain_claim(instance: &str, q: &DepthQuad) -> ClaimVerdict {
    let (lo, hi) = (q.d_h as i64 - 2, q.d_h as i64 + 1);
    ClaimVerdict::new(
        "C4",
        instance,
        "within",
        json!(q.d_min),
        json!([lo, hi]),
        json!("d_h - 2 <= d <= d_h + 1"),
        q.chain_holds(),
    )
}

#[derive(Clone, Debug)]
pub struct DepthReport {
    pub scenario: Scenario,
    pub quad: DepthQuad,
    /// rows: irreducibles of the subalgebra, columns: of the overalgebra
    pub induction: InductionMatrix,
    pub claims: Vec<ClaimVerdict>,
    pub matrices: BTreeMap<String, IntMatrix>,
    pub checks: BTreeMap<String, Value>,
}

fn matrix_json(m: &IntMatrix) -> Value {
    if m.rows() * m.cols() > MATRIX_EMIT_LIMIT {
        let nonzeros = m.entries().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count();
        return json!({ "rows": m.rows(), "cols": m.cols(), "nonzeros": nonzeros, "omitted": true });
    }
    m.to_json()
}

impl DepthReport {
    pub fn depths_json(&self) -> Value {
        json!({ "d_odd": self.quad.d_odd, "d_ev": self.quad.d_ev, "d_min": self.quad.d_min, "d_h": self.quad.d_h })
    }

    pub fn check(&self, key: &str) -> Option<&Value> {
        self.checks.get(key)
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimVerdict> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> Value {
        let mut matrices: serde_json::Map<String, Value> =
            self.matrices.iter().map(|(k, m)| (k.clone(), matrix_json(m))).collect();
        let mut m = matrix_json(&self.induction.matrix);
        if let Value::Object(obj) = &mut m {
            obj.insert("row_labels".into(), json!(self.induction.row_labels));
            obj.insert("col_labels".into(), json!(self.induction.col_labels));
        }
        matrices.insert("M".into(), m);
        json!({
            "scenario": self.scenario.to_json(),
            "depths": self.depths_json(),
            "stabilization": {
                "n_odd": self.quad.n_odd,
                "n_ev": self.quad.n_ev,
                "n_h": self.quad.n_h,
                "q": int_to_json(&self.quad.q),
            },
            "claims": self.claims.iter().map(ClaimVerdict::to_json).collect::<Vec<_>>(),
            "matrices": matrices,
            "checks": self.checks,
        })
    }

    pub fn to_markdown(&self) -> String {
        let q = &self.quad;
        let mut s = format!("# {}\n\n", self.scenario.instance());
        s.push_str("| d_odd | d_ev | d_min | d_h |\n|---|---|---|---|\n");
        let _ = writeln!(s, "| {} | {} | {} | {} |", q.d_odd, q.d_ev, q.d_min, q.d_h);
        let m = &self.induction.matrix;
        if m.rows() * m.cols() <= 400 {
            s.push_str("\n## Induction matrix\n\n| |");
            for c in &self.induction.col_labels {
                let _ = write!(s, " {c} |");
            }
            s.push_str("\n|---|");
            s.push_str(&"---|".repeat(m.cols()));
            s.push('\n');
            for (i, r) in self.induction.row_labels.iter().enumerate() {
                let _ = write!(s, "| {r} |");
                for x in m.row(i) {
                    let _ = write!(s, " {x} |");
                }
                s.push('\n');
            }
        }
        if !self.claims.is_empty() {
            s.push('\n');
            s.push_str(&claims_markdown(&self.claims));
        }
        if !self.checks.is_empty() {
            s.push_str("\n## Checks\n\n");
            for (k, v) in &self.checks {
                let _ = writeln!(s, "- {k}: {v}");
            }
        }
        s
    }
}

pub fn claims_markdown(claims: &[ClaimVerdict]) -> String {
    let mut s = String::from(
        "## Claims\n\n| id | instance | lhs | relation | rhs | stated | verdict |\n|---|---|---|---|---|---|---|\n",
    );
    for c in claims {
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} | {} |",
            c.id, c.instance, c.lhs, c.relation, c.rhs, c.paper_value, verdict
        );
    }
    s
}

/// Bipartite Bratteli graph of M: subalgebra irreducibles as boxes,
/// overalgebra irreducibles as circles, multiplicities as edge labels.
pub fn to_dot(m: &InductionMatrix) -> String {
    let mut s = String::from("graph bratteli {\n  rankdir=TB;\n");
    for (i, l) in m.row_labels.iter().enumerate() {
        let _ = writeln!(s, "  b{i} [shape=box, label=\"{l}\"];");
    }
    for (j, l) in m.col_labels.iter().enumerate() {
        let _ = writeln!(s, "  a{j} [shape=circle, label=\"{l}\"];");
    }
    for i in 0..m.matrix.rows() {
        for (j, x) in m.matrix.row(i).iter().enumerate() {
            if !num_traits::Zero::is_zero(x) {
                let _ = writeln!(s, "  b{i} -- a{j} [label=\"{x}\"];");
            }
        }
    }
    s.push_str("}\n");
    s
}

fn transposed(m: &InductionMatrix) -> Result<InductionMatrix> {
    InductionMatrix::new(m.matrix.transpose(), m.col_labels.clone(), m.row_labels.clone())
}

fn subgroup_embedding(g: &PermGroup, h: &PermGroup) -> Result<SubalgebraEmbedding> {
    let images = h
        .elements()
        .iter()
        .map(|x| g.index_of(x).map(SparseVec::unit).ok_or_else(|| Error::NotASubgroup("element outside G".into())))
        .collect::<Result<_>>()?;
    Ok(SubalgebraEmbedding { base_dim: h.order(), ambient_dim: g.order(), images })
}

/// `A<m>` / `alt(m)` as m.
fn alternating_degree(name: &str) -> Option<usize> {
    let l = name.trim().to_ascii_lowercase();
    l.strip_prefix("alt(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| l.strip_prefix('a'))
        .and_then(|r| r.trim().parse().ok())
}

fn ceil_sqrt(n: usize) -> usize {
    let mut s = 0;
    while s * s < n {
        s += 1;
    }
    s
}

/// Runs scenarios under fixed limits, sharing character tables.
#[derive(Default)]
pub struct Pipeline {
    pub limits: Limits,
    cache: TableCache,
}

impl Pipeline {
    pub fn new(limits: Limits) -> Self {
        Self { limits, cache: TableCache::default() }
    }

    pub fn group(&self, spec: &str) -> Result<PermGroup> {
        parse_group_with_cap(spec, self.limits.max_group_order)
    }

    pub fn table(&self, g: &PermGroup) -> Result<Arc<CharacterTable>> {
        self.cache.table(g, self.limits.prime_override)
    }

    fn fits(&self, dim: usize) -> bool {
        dim.saturating_mul(dim) <= self.limits.max_tensor_budget
    }

    pub fn run(&self, s: &Scenario) -> Result<DepthReport> {
        match s {
            Scenario::Matrix { matrix, .. } => {
                let induction = InductionMatrix::unlabelled(matrix.clone())?;
                self.finish(s, induction, BTreeMap::new(), BTreeMap::new(), Vec::new())
            }
            Scenario::Sym { n } => self.sym(s, *n),
            Scenario::Pair { group, subgroup } => self.pair(s, group, subgroup),
            Scenario::Heisenberg { group } => self.heisenberg(s, group),
            Scenario::Drinfeld { group } => self.drinfeld(s, group),
            Scenario::GenSmash { group, subgroup } => self.gensmash(s, group, subgroup),
        }
    }

    fn finish(
        &self,
        s: &Scenario,
        induction: InductionMatrix,
        matrices: BTreeMap<String, IntMatrix>,
        checks: BTreeMap<String, Value>,
        mut claims: Vec<ClaimVerdict>,
    ) -> Result<DepthReport> {
        let quad = depth_quad(&induction.matrix)?;
        claims.push(chain_claim(&s.instance(), &quad));
        Ok(DepthReport { scenario: s.clone(), quad, induction, claims, matrices, checks })
    }

    fn sym(&self, s: &Scenario, n: usize) -> Result<DepthReport> {
        if n == 0 {
            return Err(Error::InvalidMatrix("sym needs n >= 1".into()));
        }
        let m = young_branching_matrix(n)?;
        let quad = depth_quad(&m.matrix)?;
        let claims = vec![ClaimVerdict::new(
            "C1",
            &s.instance(),
            "=",
            json!(quad.d_min),
            json!(2 * n + 1),
            json!(2 * n + 1),
            quad.d_min == 2 * n + 1,
        )];
        let checks = BTreeMap::from([("shape".to_string(), json!([m.matrix.rows(), m.matrix.cols()]))]);
        self.finish(s, m, BTreeMap::new(), checks, claims)
    }

    fn pair(&self, s: &Scenario, group: &str, subgroup: &str) -> Result<DepthReport> {
        let inst = s.instance();
        let g = self.group(group)?;
        let h = parse_subgroup(subgroup, &g)?;
        let (gt, ht) = (self.table(&g)?, self.table(&h)?);
        let m = induction_matrix(&ht, &gt)?;
        let quad = depth_quad(&m.matrix)?;
        let normal = is_normal(&h, &g)?;
        let bridge = h_depth_via_q(&ht, &gt)?;
        let s_mat = mat_mul(&m.matrix, &m.matrix.transpose())?;

        let mut checks = BTreeMap::new();
        checks.insert("is_normal".into(), json!(normal));
        checks.insert("module_depth_q".into(), json!(bridge.module_depth.depth));
        let mut matrices = BTreeMap::from([("S".to_string(), s_mat.clone())]);
        if self.fits(g.order()) {
            let kg = group_algebra(&g);
            let t = bimodule_mult_matrix(kg.alg(), &subgroup_embedding(&g, &h)?, &ht)?;
            checks.insert("bimodule_matrix_equals_s".into(), json!(t.matrix == s_mat));
            checks.insert("odd_depth_via_bimodules".into(), json!(t.odd_depth()?));
            matrices.insert("T".into(), t.matrix);
        } else {
            checks.insert("odd_depth_via_bimodules".into(), json!("skipped: budget"));
        }

        let mut claims = vec![
            ClaimVerdict::new(
                "C2",
                &inst,
                "iff",
                json!(normal),
                json!(quad.d_min <= 2),
                json!("normal iff d <= 2"),
                normal == (quad.d_min <= 2),
            ),
            ClaimVerdict::new(
                "C3",
                &inst,
                "=",
                json!(bridge.via_q),
                json!(quad.d_h),
                json!("d_h = 2 d(Q) + 1"),
                bridge.via_q == quad.d_h,
            ),
        ];
        if let (Some(a), Some(b)) = (alternating_degree(group), alternating_degree(subgroup)) {
            if a == b + 1 && b >= 1 {
                let bound = 2 * (b - ceil_sqrt(b)) + 1;
                claims.push(ClaimVerdict::new(
                    "C8",
                    &inst,
                    "<=",
                    json!(quad.d_min),
                    json!(bound),
                    json!(bound),
                    quad.d_min <= bound,
                ));
            }
        }
        self.finish(s, m, matrices, checks, claims)
    }

    fn heisenberg(&self, s: &Scenario, group: &str) -> Result<DepthReport> {
        let g = self.group(group)?;
        let n = g.order();
        // H # H* ≅ End(H): one simple module, H itself, which restricts to
        // H* = k^G as the sum of all |G| characters δ_x
        let m = IntMatrix::new(n, 1, vec![1.into(); n])?;
        let rows = (0..n).map(|i| format!("d{}[1]", i + 1)).collect();
        let induction = InductionMatrix::new(m, rows, vec![format!("End[{n}]")])?;
        let mut checks = BTreeMap::new();
        if self.fits(n * n) {
            let x = heisenberg_double(&group_algebra(&g))?;
            checks.insert("dim".into(), json!(x.alg.dim()));
            checks.insert("center_dim".into(), json!(x.alg.center_dim()));
        } else {
            checks.insert("center_dim".into(), json!("skipped: budget"));
        }
        let quad = depth_quad(&induction.matrix)?;
        let claims =
            vec![ClaimVerdict::new("C5", &s.instance(), "=", json!(quad.d_min), json!(3), json!(3), quad.d_min == 3)];
        self.finish(s, induction, BTreeMap::new(), checks, claims)
    }

    fn drinfeld(&self, s: &Scenario, group: &str) -> Result<DepthReport> {
        let g = self.group(group)?;
        let gt = self.table(&g)?;
        let md = drinfeld_induction_matrix(&gt)?;
        let n_mat = mat_mul(&md.matrix.transpose(), &md.matrix)?;
        let mut checks = BTreeMap::new();
        checks.insert("abelian".into(), json!(g.is_abelian()));
        checks.insert("simple_count".into(), json!(md.matrix.rows()));
        let mut matrices = BTreeMap::from([("M_D".to_string(), md.matrix.clone()), ("S".to_string(), n_mat.clone())]);
        let n = g.order();
        if self.fits(n * n) {
            let d = drinfeld_double(&group_algebra(&g))?;
            let t = bimodule_mult_matrix(d.hopf.alg(), &d.embed_h, &gt)?;
            checks.insert("dim".into(), json!(d.hopf.dim()));
            checks.insert("center_dim".into(), json!(d.hopf.alg().center_dim()));
            checks.insert("commutative".into(), json!(d.hopf.alg().is_commutative()));
            checks.insert("bimodule_matrix_equals_md_t_md".into(), json!(t.matrix == n_mat));
            matrices.insert("T".into(), t.matrix);
        } else {
            checks.insert("bimodule_matrix_equals_md_t_md".into(), json!("skipped: budget"));
        }
        let induction = transposed(&md)?;
        let quad = depth_quad(&induction.matrix)?;
        let claims =
            vec![ClaimVerdict::new("C7", &s.instance(), "<=", json!(3), json!(quad.d_min), json!(3), 3 <= quad.d_min)];
        self.finish(s, induction, matrices, checks, claims)
    }

    fn gensmash(&self, s: &Scenario, group: &str, subgroup: &str) -> Result<DepthReport> {
        let g = self.group(group)?;
        let h = parse_subgroup(subgroup, &g)?;
        let (gt, ht) = (self.table(&g)?, self.table(&h)?);
        let m = induction_matrix(&ht, &gt)?;
        let d_h_pair = h_depth(&m.matrix)?;
        let dim = g.order() / h.order() * g.order();
        if !self.fits(dim) {
            return Err(Error::BudgetExceeded { needed: dim * dim, budget: self.limits.max_tensor_budget });
        }
        let (kg, _, q) = group_pair_quotient(&g, &h)?;
        let x = generalized_smash(&kg, &q)?;
        let t = bimodule_mult_matrix(&x.alg, &x.embed_b, &gt)?;
        let d_odd_trace = t.odd_depth()?;
        // Q*ᵒᵖ # kG is Morita equivalent to kH; the simple at χ ∈ Irr(H)
        // restricts to kG as Ind χ, so the inclusion matrix is Mᵀ
        let induction = transposed(&m)?;
        let s_mat = mat_mul(&induction.matrix, &induction.matrix.transpose())?;
        let mut checks = BTreeMap::new();
        checks.insert("dim".into(), json!(x.alg.dim()));
        checks.insert("center_dim".into(), json!(x.alg.center_dim()));
        checks.insert("subgroup_class_count".into(), json!(ht.len()));
        checks.insert("bimodule_matrix_equals_mt_m".into(), json!(t.matrix == s_mat));
        checks.insert("odd_depth_via_bimodules".into(), json!(d_odd_trace));
        checks.insert("h_depth_of_pair".into(), json!(d_h_pair));
        let claims = vec![ClaimVerdict::new(
            "C6",
            &s.instance(),
            "=",
            json!(d_odd_trace),
            json!(d_h_pair),
            json!("d_odd(H, Q*op # H) = d_h(R, H)"),
            d_odd_trace == d_h_pair,
        )];
        let matrices = BTreeMap::from([("M_pair".to_string(), m.matrix.clone()), ("T".to_string(), t.matrix)]);
        self.finish(s, induction, matrices, checks, claims)
    }

    /// Every scenario of the battery, in battery order.
    pub fn run_all(&self, battery: &[Scenario]) -> Result<Vec<DepthReport>> {
        battery.par_iter().map(|s| self.run(s)).collect()
    }

    pub fn audit(&self, battery: &[Scenario]) -> Result<Vec<ClaimVerdict>> {
        Ok(self.run_all(battery)?.into_iter().flat_map(|r| r.claims).collect())
    }
}

pub fn scenario(descriptor: &Scenario) -> Result<DepthReport> {
    Pipeline::default().run(descriptor)
}

pub fn claims_audit(battery: &[Scenario]) -> Result<Vec<ClaimVerdict>> {
    Pipeline::default().audit(battery)
}

pub fn audit_json(battery: &str, claims: &[ClaimVerdict]) -> Value {
    let pass = claims.iter().filter(|c| c.passed()).count();
    json!({
        "battery": battery,
        "claims": claims.iter().map(ClaimVerdict::to_json).collect::<Vec<_>>(),
        "summary": { "PASS": pass, "FAIL": claims.len() - pass },
    })
}

pub fn default_battery() -> Vec<Scenario> {
    let mut b: Vec<Scenario> = (1..=8).map(|n| Scenario::Sym { n }).collect();
    for (g, h) in [("S3", "[[1,2]]"), ("S3", "A3"), ("S4", "S3"), ("S3", "[[1,2,3]]"), ("A4", "V4"), ("D4", "[[2,4]]")]
    {
        b.push(Scenario::pair(g, h));
    }
    for g in ["C2", "S3"] {
        b.push(Scenario::Heisenberg { group: g.into() });
    }
    for g in ["C2", "C3", "S3"] {
        b.push(Scenario::Drinfeld { group: g.into() });
    }
    b.push(Scenario::GenSmash { group: "S3".into(), subgroup: "[[1,2]]".into() });
    b.push(Scenario::pair("A5", "A4"));
    b
}

pub fn battery(name: &str) -> Result<Vec<Scenario>> {
    match name {
        "default" => Ok(default_battery()),
        "sym" => Ok((1..=8).map(|n| Scenario::Sym { n }).collect()),
        "pairs" => Ok(default_battery().into_iter().filter(|s| matches!(s, Scenario::Pair { .. })).collect()),
        other => Err(Error::Parse(format!("unknown battery `{other}`"))),
    }
}

/// Factorization algebras used for the θ checks: `flip` (kG ⊗ kG),
/// `heisenberg` (kG # kG*) and `smash` (k^G # kG with g·δ_x = δ_{gx}).
pub fn theta_instance(name: &str, g: &PermGroup) -> Result<FactorizationAlgebra> {
    let kg = group_algebra(g);
    let d = kg.dim();
    match name {
        "flip" => factorization_algebra(kg.alg(), kg.alg(), &flip_map(d, d)),
        "heisenberg" => heisenberg_double(&kg),
        "smash" => {
            let act = (0..d).map(|x| (0..d).map(|y| SparseVec::unit(g.mul(x, y))).collect()).collect();
            smash_product(kg.dual().alg(), &kg, &ModuleAction::new(act))
        }
        other => Err(Error::Parse(format!("unknown theta scenario `{other}` (flip, heisenberg, smash)"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(s: &Scenario) -> (usize, usize, usize, usize) {
        let q = scenario(s).unwrap().quad;
        (q.d_odd, q.d_ev, q.d_min, q.d_h)
    }

    #[test]
    fn descriptor_round_trip() {
        for s in default_battery().into_iter().chain([Scenario::Matrix {
            matrix: IntMatrix::from_rows(&[[1, 1]]).unwrap(),
            source: Some("m.json".into()),
        }]) {
            assert_eq!(Scenario::from_json(&s.to_json()).unwrap(), s);
        }
    }

    #[test]
    fn sym_two_matches_pair() {
        assert_eq!(quad(&Scenario::Sym { n: 2 }), (3, 4, 3, 5));
        assert_eq!(quad(&Scenario::pair("S3", "[[1,2]]")), (3, 4, 3, 5));
    }

    #[test]
    fn sym_matches_character_route() {
        for n in 1..=4 {
            let sym = scenario(&Scenario::Sym { n }).unwrap();
            let pair = scenario(&Scenario::pair(&format!("S{}", n + 1), &format!("S{n}"))).unwrap();
            assert_eq!(sym.quad, pair.quad, "n={n}");
            assert_eq!(sym.induction.matrix, pair.induction.matrix, "n={n}");
        }
    }

    #[test]
    fn heisenberg_c2() {
        let r = scenario(&Scenario::Heisenberg { group: "C2".into() }).unwrap();
        assert_eq!((r.quad.d_odd, r.quad.d_ev, r.quad.d_min, r.quad.d_h), (3, 2, 2, 1));
        assert_eq!(r.check("center_dim"), Some(&json!(1)));
        assert!(!r.claim("C5").unwrap().passed());
    }

    #[test]
    fn drinfeld_abelian_is_depth_one() {
        for g in ["C2", "C3"] {
            let r = scenario(&Scenario::Drinfeld { group: g.into() }).unwrap();
            assert_eq!(r.quad.d_min, 1, "{g}");
            assert_eq!(r.check("commutative"), Some(&json!(true)));
            assert_eq!(r.check("bimodule_matrix_equals_md_t_md"), Some(&json!(true)));
            assert!(!r.claim("C7").unwrap().passed());
        }
    }

    #[test]
    fn pair_claims() {
        let r = scenario(&Scenario::pair("S3", "A3")).unwrap();
        assert_eq!(r.quad.d_min, 2);
        assert!(r.claims.iter().all(ClaimVerdict::passed));
        let r = scenario(&Scenario::pair("S3", "[[1,2]]")).unwrap();
        let c3 = r.claim("C3").unwrap();
        assert_eq!((c3.lhs.clone(), c3.rhs.clone()), (json!(5), json!(5)));
        assert_eq!(r.check("bimodule_matrix_equals_s"), Some(&json!(true)));
    }

    #[test]
    fn dot_output_shape() {
        let r = scenario(&Scenario::Sym { n: 2 }).unwrap();
        let dot = to_dot(&r.induction);
        assert!(dot.starts_with("graph bratteli {"));
        assert_eq!(dot.matches("shape=box").count(), 2);
        assert_eq!(dot.matches("shape=circle").count(), 3);
        assert_eq!(dot.matches(" -- ").count(), 4);
    }

    #[test]
    fn caps_are_enforced() {
        let p = Pipeline::new(Limits { max_group_order: 10, ..Limits::default() });
        assert!(matches!(p.run(&Scenario::pair("S4", "S3")), Err(Error::CapExceeded { .. })));
        let p = Pipeline::new(Limits { max_tensor_budget: 100, ..Limits::default() });
        assert!(matches!(
            p.run(&Scenario::GenSmash { group: "S3".into(), subgroup: "[[1,2]]".into() }),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn alternating_names() {
        assert_eq!(alternating_degree("A5"), Some(5));
        assert_eq!(alternating_degree("alt(4)"), Some(4));
        assert_eq!(alternating_degree("S4"), None);
        assert_eq!(ceil_sqrt(4), 2);
        assert_eq!(ceil_sqrt(5), 3);
    }
}
