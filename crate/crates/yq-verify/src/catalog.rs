//! The relation catalog: every checked identity as data.
//!
//! Each entry is a chain of expressions in the language of [`crate::expr`],
//! a list of index variables with their ranges, an optional filter on the
//! index values, and the smallest rank at which the relation makes sense.

/// Which verification suite a relation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// Drinfeld-type relations among the Gauss series, and the rank-two
    /// matrix relations they are read off from.
    Drinfeld,
    /// Rank-three relations leading to the Serre relations.
    Serre,
    /// Relations involving the embeddings `ψ_m` and `φ_m`.
    Embedding,
}

/// Range of an index variable, in terms of the rank `n`, the truncation `L`
/// and (for embeddings) the already bound variable `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// `1..=n`
    Node,
    /// `1..=n−1`
    Edge,
    /// `1..=n−2` (edges with a right neighbour)
    Inner,
    /// `1..=L` (a coefficient index)
    Coeff,
    /// `1..=n−1` (the embedding shift `m`)
    Shift,
    /// `1..=m`
    Low,
    /// `m+1..=n`
    High,
    /// `1..=n−m`
    Rest,
}

/// Extra constraint on the first two index variables `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    /// No constraint.
    All,
    /// `a ≠ b`
    Distinct,
    /// `a ∉ {b, b+1}`
    Apart,
    /// `|a − b| > 1`
    Far,
    /// `|a − b| = 1`
    Adjacent,
}

impl Filter {
    /// Whether the values pass the filter.
    pub fn accepts(self, vals: &[i64]) -> bool {
        let (a, b) = (vals.first().copied().unwrap_or(0), vals.get(1).copied().unwrap_or(0));
        match self {
            Filter::All => true,
            Filter::Distinct => a != b,
            Filter::Apart => a != b && a != b + 1,
            Filter::Far => (a - b).abs() > 1,
            Filter::Adjacent => (a - b).abs() == 1,
        }
    }
}

/// One catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationSpec {
    /// Stable identifier.
    pub id: &'static str,
    /// The relation chain.
    pub text: &'static str,
    /// Index variables with their ranges, bound in order.
    pub vars: &'static [(char, Domain)],
    /// Constraint on the first two variables.
    pub filter: Filter,
    /// Smallest admissible rank.
    pub min_n: usize,
    /// Suite membership.
    pub suite: Suite,
    /// Entries sharing an alternative group are competing readings of the
    /// same identity; the group holds if any member holds.
    pub alternative: Option<&'static str>,
}

const A: &[(char, Domain)] = &[('a', Domain::Node)];
const AE: &[(char, Domain)] = &[('a', Domain::Edge)];
const AB_NODE: &[(char, Domain)] = &[('a', Domain::Node), ('b', Domain::Node)];
const AB_NODE_EDGE: &[(char, Domain)] = &[('a', Domain::Node), ('b', Domain::Edge)];
const AB_EDGE: &[(char, Domain)] = &[('a', Domain::Edge), ('b', Domain::Edge)];
const AE2: &[(char, Domain)] = &[('a', Domain::Inner)];
const NONE: &[(char, Domain)] = &[];
const SERRE3: &[(char, Domain)] = &[('a', Domain::Edge), ('b', Domain::Edge), ('t', Domain::Coeff)];

const fn rel(id: &'static str, text: &'static str, vars: &'static [(char, Domain)], filter: Filter, min_n: usize, suite: Suite) -> RelationSpec {
    RelationSpec { id, text, vars, filter, min_n, suite, alternative: None }
}

/// Marks `spec` as a member of the alternative group `group`.
const fn alt(spec: RelationSpec, group: &'static str) -> RelationSpec {
    RelationSpec { alternative: Some(group), ..spec }
}

const fn dr(id: &'static str, text: &'static str, vars: &'static [(char, Domain)], filter: Filter, min_n: usize) -> RelationSpec {
    rel(id, text, vars, filter, min_n, Suite::Drinfeld)
}

const fn dr_serre(id: &'static str, text: &'static str) -> RelationSpec {
    rel(id, text, AB_EDGE, Filter::Adjacent, 3, Suite::Serre)
}

/// The Drinfeld relations among `h`, `h̄`, `e`, `ē`, `f`, `f̄`.
pub const DRINFELD: &[RelationSpec] = &[
    dr("dr.hahb", "[h{a}(u),h{b}(v)] = [h{a}(u),hb{b}(v)] = [hb{a}(u),h{b}(v)] = [hb{a}(u),hb{b}(v)] = 0", AB_NODE, Filter::Distinct, 2),
    dr("dr.haha", "(x+y)*(y-x-x*y)*[h{a}(u),h{a}(v)] = x*y*(y-x)*(hb{a}(u)*hb{a}(v) - hb{a}(-v)*hb{a}(-u))", A, Filter::All, 1),
    dr("dr.hahta", "[h{a}(u),hb{a}(v)] = dm(hb{a}(u)*h{a}(v) - hb{a}(v)*h{a}(u)) + dp(h{a}(u)*hb{a}(v) - h{a}(-v)*hb{a}(-u))", A, Filter::All, 1),
    alt(dr("dr.htahta", "[hb{a}(u),hb{a}(v)] = dp(h{a}(u)*h{a}(v) - h{a}(-v)*h{a}(-u)) - dm(hb{a}(u)*hb{a}(v) - hb{a}(v)*hb{a}(u))", A, Filter::All, 1), "dr.htahta"),
    alt(dr("dr.htahta.fix", "[hb{a}(u),hb{a}(v)] = -dp(h{a}(u)*h{a}(v) - h{a}(-v)*h{a}(-u)) - dm(hb{a}(u)*hb{a}(v) - hb{a}(v)*hb{a}(u))", A, Filter::All, 1), "dr.htahta"),
    dr("dr.haeb", "[h{a}(u),e{b}(v)] = [hb{a}(u),e{b}(v)] = [h{a}(u),eb{b}(v)] = [hb{a}(u),eb{b}(v)] = 0", AB_NODE_EDGE, Filter::Apart, 3),
    alt(dr("dr.haea", "[h{a}(u),e{a}(v)] = [hb{a}(-u),eb{a}(v)] = h{a}(u)*dm(e{a}(v)-e{a}(u)) + hb{a}(-u)*dm(eb{a}(v)-eb{a}(u))", AE, Filter::All, 2), "dr.haea"),
    alt(dr("dr.haea.fix", "[h{a}(u),e{a}(v)] = [hb{a}(-u),eb{a}(v)] = h{a}(u)*dm(e{a}(v)-e{a}(u)) - hb{a}(-u)*dm(eb{a}(v)-eb{a}(u))", AE, Filter::All, 2), "dr.haea"),
    dr("dr.haeta", "[h{a}(u),eb{a}(v)] = -[hb{a}(-u),e{a}(v)] = h{a}(u)*dp(eb{a}(v)-eb{a}(-u)) + hb{a}(-u)*dp(e{a}(v)-e{a}(-u))", AE, Filter::All, 2),
    dr("dr.htaea", "[hb{a}(u),e{a}(v)] = hb{a}(u)*dm(e{a}(v)-e{a}(u)) + h{a}(-u)*dm(eb{a}(v)-eb{a}(u))", AE, Filter::All, 2),
    dr("dr.ha1ea", "[h{a+1}(u),e{a}(v)] = h{a+1}(u)*dm(e{a}(u)-e{a}(v)) + hb{a+1}(-u)*dp(eb{a}(u)-eb{a}(-v))", AE, Filter::All, 2),
    dr("dr.ha1eta", "[h{a+1}(u),eb{a}(v)] = h{a+1}(u)*dm(eb{a}(u)-eb{a}(v)) + hb{a+1}(-u)*dp(e{a}(u)-e{a}(-v))", AE, Filter::All, 2),
    dr("dr.hta1ea", "[hb{a+1}(u),e{a}(v)] = hb{a+1}(u)*dm(e{a}(u)-e{a}(v)) - h{a+1}(-u)*dp(eb{a}(u)-eb{a}(-v))", AE, Filter::All, 2),
    dr("dr.hta1eta", "[hb{a+1}(u),eb{a}(v)] = hb{a+1}(u)*dm(eb{a}(u)-eb{a}(v)) - h{a+1}(-u)*dp(e{a}(u)-e{a}(-v))", AE, Filter::All, 2),
    dr("dr.hafb", "[h{a}(u),f{b}(v)] = [hb{a}(u),f{b}(v)] = [h{a}(u),fb{b}(v)] = [hb{a}(u),fb{b}(v)] = 0", AB_NODE_EDGE, Filter::Apart, 3),
    dr("dr.hafa", "[h{a}(u),f{a}(v)] = -[hb{a}(u),fb{a}(-v)] = dm(f{a}(u)-f{a}(v))*h{a}(u) - dm(fb{a}(-u)-fb{a}(-v))*hb{a}(u)", AE, Filter::All, 2),
    dr("dr.hafta", "[h{a}(u),fb{a}(v)] = -[hb{a}(u),f{a}(-v)] = dm(fb{a}(u)-fb{a}(v))*h{a}(u) + dm(f{a}(-u)-f{a}(-v))*hb{a}(u)", AE, Filter::All, 2),
    dr("dr.ha1fa", "[h{a+1}(u),f{a}(v)] = dm(f{a}(v)-f{a}(u))*h{a+1}(u) - dp(fb{a}(-u)-fb{a}(v))*hb{a+1}(u)", AE, Filter::All, 2),
    dr("dr.ha1fta", "[h{a+1}(u),fb{a}(v)] = dm(f{a}(v)-f{a}(u))*hb{a+1}(u) - dp(fb{a}(-u)-fb{a}(v))*h{a+1}(u)", AE, Filter::All, 2),
    dr("dr.hta1fa", "[hb{a+1}(u),f{a}(v)] = dm(fb{a}(v)-fb{a}(u))*h{a+1}(u) + dp(f{a}(-u)-f{a}(v))*hb{a+1}(u)", AE, Filter::All, 2),
    dr("dr.hta1fta", "[hb{a+1}(u),fb{a}(v)] = dm(fb{a}(v)-fb{a}(u))*hb{a+1}(u) + dp(f{a}(-u)-f{a}(v))*h{a+1}(u)", AE, Filter::All, 2),
    dr("dr.eafb", "[e{a}(u),f{b}(v)] = [e{a}(u),fb{b}(v)] = [eb{a}(u),f{b}(v)] = [eb{a}(u),fb{b}(v)] = 0", AB_EDGE, Filter::Distinct, 3),
    dr("dr.eafa", "[e{a}(u),f{a}(v)] = dm(hp{a}(u)*h{a+1}(u) - h{a+1}(v)*hp{a}(v)) + dp(hbp{a}(-u)*hb{a+1}(u) + hb{a+1}(-v)*hbp{a}(v))", AE, Filter::All, 2),
    dr("dr.eafta", "[e{a}(u),fb{a}(v)] = dm(hp{a}(u)*hb{a+1}(u) - hb{a+1}(v)*hp{a}(v)) + dp(hbp{a}(-u)*h{a+1}(u) - h{a+1}(-v)*hbp{a}(v))", AE, Filter::All, 2),
    dr("dr.etafa", "[eb{a}(u),f{a}(v)] = dm(hbp{a}(u)*h{a+1}(u) - h{a+1}(v)*hbp{a}(v)) - dp(hp{a}(-u)*hb{a+1}(u) - hb{a+1}(-v)*hp{a}(v))", AE, Filter::All, 2),
    dr("dr.etafta", "[eb{a}(u),fb{a}(v)] = dm(hbp{a}(u)*hb{a+1}(u) + hb{a+1}(v)*hbp{a}(v)) - dp(hp{a}(-u)*h{a+1}(u) - h{a+1}(-v)*hp{a}(v))", AE, Filter::All, 2),
    dr("dr.eaeb", "[e{a}(u),e{b}(v)] = [e{a}(u),eb{b}(v)] = [eb{a}(u),e{b}(v)] = [eb{a}(u),eb{b}(v)] = 0", AB_EDGE, Filter::Far, 4),
    dr("dr.eaea", "[e{a}(u),e{a}(v)] = dm((e{a}(v)-e{a}(u))*(e{a}(v)-e{a}(u))) - dp((eb{a}(-v)-eb{a}(u))*(eb{a}(v)-eb{a}(-u)))", AE, Filter::All, 2),
    dr("dr.eaeta", "[e{a}(u),eb{a}(v)] = dm((e{a}(u)-e{a}(v))*(eb{a}(u)-eb{a}(v))) + dp((eb{a}(-u)-eb{a}(v))*(e{a}(u)-e{a}(-v)))", AE, Filter::All, 2),
    dr("dr.etaeta", "[eb{a}(u),eb{a}(v)] = -dm((eb{a}(v)-eb{a}(u))*(eb{a}(v)-eb{a}(u))) - dp((e{a}(-v)-e{a}(u))*(e{a}(v)-e{a}(-u)))", AE, Filter::All, 2),
    dr("dr.eaea1", "[e{a}(u),e{a+1}(v)] = [eb{a}(-u),eb{a+1}(v)]", AE2, Filter::All, 3),
    dr("dr.eaeta1", "[e{a}(u),eb{a+1}(v)] = -[eb{a}(-u),e{a+1}(v)]", AE2, Filter::All, 3),
    dr("dr.ecircle", "y*[eo{a}(u),e{a+1}(v)] - x*[e{a}(u),eo{a+1}(v)] = x*y*(e{a}(u)*e{a+1}(v) - eb{a}(-u)*eb{a+1}(v))", AE2, Filter::All, 3),
    dr("dr.etcircle", "y*[ebo{a}(u),e{a+1}(v)] - x*[eb{a}(u),eo{a+1}(v)] = x*y*(eb{a}(u)*e{a+1}(v) + e{a}(-u)*eb{a+1}(v))", AE2, Filter::All, 3),
    dr("dr.fafb", "[f{a}(u),f{b}(v)] = [f{a}(u),fb{b}(v)] = [fb{a}(u),f{b}(v)] = [fb{a}(u),fb{b}(v)] = 0", AB_EDGE, Filter::Far, 4),
    dr("dr.fafa", "[f{a}(u),f{a}(v)] = -dm((f{a}(v)-f{a}(u))*(f{a}(v)-f{a}(u))) + dp((fb{a}(-v)-fb{a}(u))*(fb{a}(v)-fb{a}(-u)))", AE, Filter::All, 2),
    dr("dr.fafta", "[f{a}(u),fb{a}(v)] = -dp((fb{a}(-u)-fb{a}(v))*(f{a}(u)-f{a}(-v))) - dm((f{a}(u)-f{a}(v))*(fb{a}(u)-fb{a}(v)))", AE, Filter::All, 2),
    alt(dr("dr.ftafta", "[fb{a}(u),fb{a}(v)] = dm((fb{a}(v)-fb{a}(u))*(fb{a}(v)-fb{a}(u))) + dp((f{a}(-v)-f{a}(u))*(f{a}(v)-f{a}(u)))", AE, Filter::All, 2), "dr.ftafta"),
    alt(dr("dr.ftafta.fix", "[fb{a}(u),fb{a}(v)] = dm((fb{a}(v)-fb{a}(u))*(fb{a}(v)-fb{a}(u))) + dp((f{a}(-v)-f{a}(u))*(f{a}(v)-f{a}(-u)))", AE, Filter::All, 2), "dr.ftafta"),
    dr("dr.fafa1", "[f{a}(u),f{a+1}(v)] = -[fb{a}(u),fb{a+1}(-v)]", AE2, Filter::All, 3),
    dr("dr.ftafa1", "[f{a}(u),fb{a+1}(v)] = -[fb{a}(u),f{a+1}(-v)]", AE2, Filter::All, 3),
    dr("dr.fcircle", "y*[fo{a}(u),f{a+1}(v)] - x*[f{a}(u),fo{a+1}(v)] = x*y*(fb{a+1}(-v)*fb{a}(u) - f{a+1}(v)*f{a}(u))", AE2, Filter::All, 3),
    dr("dr.ftcircle", "y*[fbo{a}(u),f{a+1}(v)] + x*[fb{a}(u),fo{a+1}(v)] = x*y*(f{a+1}(v)*fb{a}(u) + fb{a+1}(-v)*f{a}(u))", AE2, Filter::All, 3),
    dr_serre("dr.eserre1", "[e{a}(u),[e{a}(u),e{b}(v)]] - [eb{a}(-u),[eb{a}(u),e{b}(v)]] = 0"),
    dr_serre("dr.eserre2", "[e{a}(-u),[e{a}(u),e{b}(v)]] + [eb{a}(u),[eb{a}(u),e{b}(v)]] = 0"),
    dr_serre("dr.eserre3", "[e{a}(-u),[eb{a}(u),e{b}(v)]] + [eb{a}(u),[e{a}(u),e{b}(v)]] = 0"),
    dr_serre("dr.eserre4", "[e{a}(u),[eb{a}(u),e{b}(v)]] - [eb{a}(-u),[e{a}(u),e{b}(v)]] = 0"),
    dr_serre("dr.fserre1", "[f{a}(u),[f{a}(u),f{b}(v)]] + [fb{a}(u),[fb{a}(-u),f{b}(v)]] = 0"),
    dr_serre("dr.fserre2", "[f{a}(u),[f{a}(-u),f{b}(v)]] - [fb{a}(u),[fb{a}(u),f{b}(v)]] = 0"),
    dr_serre("dr.fserre3", "[f{a}(u),[fb{a}(u),f{b}(v)]] + [fb{a}(u),[f{a}(-u),f{b}(v)]] = 0"),
    dr_serre("dr.fserre4", "[f{a}(u),[fb{a}(-u),f{b}(v)]] - [fb{a}(u),[f{a}(u),f{b}(v)]] = 0"),
];

const fn q2(id: &'static str, text: &'static str) -> RelationSpec {
    rel(id, text, NONE, Filter::All, 2, Suite::Drinfeld)
}

/// Matrix relations in rank two and the entry identities read off them.
pub const RANK_TWO: &[RelationSpec] = &[
    rel("q2.HaHa", "[H{a}^1(u),H{a}^2(v)] = ks(K*H{a}^1(u)*H{a}^2(v) - H{a}^2(v)*H{a}^1(u)*K)", A, Filter::All, 1, Suite::Drinfeld),
    q2("q2.H1H2", "[H{1}^1(u),H{2}^2(v)] = 0"),
    q2("q2.H1E1", "[H{1}^1(u),E{1}^2(v)] = H{1}^1(u)*ks(K*E{1}^2(v) - E{1}^1(u)*K)"),
    q2("q2.H2E1", "[H{2}^1(u),E{1}^2(v)] = H{2}^1(u)*ks(K*E{1}^1(u) - E{1}^2(v)*K)"),
    q2("q2.E1F1", "[E{1}^1(u),F{1}^2(v)] = ks(Ht{1}^1(u)*K*H{2}^1(u) - H{2}^2(v)*K*Ht{1}^2(v))"),
    q2("q2.E1E1", "[E{1}^1(u),E{1}^2(v)] = dm(P*(E{1}^1(v)-E{1}^1(u))*(E{1}^2(v)-E{1}^2(u))) + dp(Q*(E{1}^1(-v)-E{1}^1(u))*(E{1}^2(v)-E{1}^2(-u)))"),
    q2("q2.E1uE1u", "P*[E{1}^1(u),E{1}^2(u)] - Q*[E{1}^1(u),E{1}^2(-u)] = 0"),
    q2("q2.E1uE1u2", "2*[E{1}^1(u),E{1}^2(u)] = -x*Q*(E{1}^1(u)-E{1}^1(-u))*(E{1}^2(u)-E{1}^2(-u))"),
    q2("q2.E1E1.ee", "[e{1}(u),e{1}(v)] = dm((e{1}(v)-e{1}(u))*(e{1}(v)-e{1}(u))) - dp((eb{1}(-v)-eb{1}(u))*(eb{1}(v)-eb{1}(-u)))"),
    q2("q2.E1E1.eeb1", "[e{1}(u),eb{1}(v)] = dm((eb{1}(v)-eb{1}(u))*(e{1}(v)-e{1}(u))) + dp((e{1}(-v)-e{1}(u))*(eb{1}(v)-eb{1}(-u)))"),
    q2("q2.E1E1.eeb2", "[e{1}(u),eb{1}(v)] = dm((e{1}(u)-e{1}(v))*(eb{1}(u)-eb{1}(v))) + dp((eb{1}(-u)-eb{1}(v))*(e{1}(u)-e{1}(-v)))"),
    q2("q2.E1E1.ebeb", "[eb{1}(u),eb{1}(v)] = -dm((eb{1}(v)-eb{1}(u))*(eb{1}(v)-eb{1}(u))) - dp((e{1}(-v)-e{1}(u))*(e{1}(v)-e{1}(-u)))"),
    q2("q2.E1uE1u.1", "[e{1}(u),e{1}(u)] = [eb{1}(-u),eb{1}(u)]"),
    q2("q2.E1uE1u.2", "[e{1}(u),e{1}(-u)] = [eb{1}(u),eb{1}(u)]"),
    q2("q2.E1uE1u.3", "[e{1}(u),eb{1}(u)] = [eb{1}(-u),e{1}(u)]"),
    q2("q2.E1uE1u.4", "[e{1}(u),eb{1}(u)] = [e{1}(-u),eb{1}(u)]"),
];

const fn q3(id: &'static str, text: &'static str) -> RelationSpec {
    rel(id, text, NONE, Filter::All, 3, Suite::Serre)
}

const fn q3_alt(id: &'static str, text: &'static str, group: &'static str) -> RelationSpec {
    RelationSpec { id, text, vars: NONE, filter: Filter::All, min_n: 3, suite: Suite::Serre, alternative: Some(group) }
}

const fn q3_serre(id: &'static str, text: &'static str) -> RelationSpec {
    rel(id, text, SERRE3, Filter::Adjacent, 3, Suite::Serre)
}

/// Rank-three relations behind the Serre relations.
pub const RANK_THREE: &[RelationSpec] = &[
    q3("q3.E1E2", "[E{1}^1(u),E{2}^2(v)] = ks(K*E{1,3}^2(v) - E{1,3}^1(u)*K + (E{1}^1(u)*K - K*E{1}^2(v))*E{2}^2(v))"),
    q3_alt(
        "q3.e1e2.minus",
        "(y-x)*[e{1}(u),e{2}(v)] = x*y*(e{1,3}(v) - e{1,3}(u) + (e{1}(u)-e{1}(v))*e{2}(v) - (eb{1}(-u)-eb{1}(-v))*eb{2}(v))",
        "q3.e1e2",
    ),
    q3_alt(
        "q3.e1e2.plus",
        "(y-x)*[e{1}(u),e{2}(v)] = x*y*(e{1,3}(v) - e{1,3}(u) + (e{1}(u)-e{1}(v))*e{2}(v) - (eb{1}(-u)+eb{1}(-v))*eb{2}(v))",
        "q3.e1e2",
    ),
    q3("q3.e1be2", "(x+y)*[e{1}(u),eb{2}(v)] = x*y*(eb{1,3}(v) - eb{1,3}(-u) + (e{1}(u)-e{1}(-v))*eb{2}(v) + (eb{1}(-u)-eb{1}(v))*e{2}(v))"),
    q3("q3.be1e2", "(y-x)*[eb{1}(u),e{2}(v)] = x*y*(eb{1,3}(v) - eb{1,3}(u) + (e{1}(-u)-e{1}(-v))*eb{2}(v) + (eb{1}(u)-eb{1}(v))*e{2}(v))"),
    q3("q3.be1be2", "(x+y)*[eb{1}(u),eb{2}(v)] = x*y*(e{1,3}(-u) - e{1,3}(v) - (e{1}(-u)-e{1}(v))*e{2}(v) + (eb{1}(u)-eb{1}(-v))*eb{2}(v))"),
    q3("q3.ee", "[e{1}(u),e{2}(v)] = [eb{1}(-u),eb{2}(v)]"),
    q3("q3.ebe", "[e{1}(u),eb{2}(v)] = -[eb{1}(-u),e{2}(v)]"),
    q3("q3.e1circle", "y*[eo{1}(u),e{2}(v)] - x*[e{1}(u),eo{2}(v)] = x*y*(e{1}(u)*e{2}(v) - eb{1}(-u)*eb{2}(v))"),
    q3("q3.be1circle", "y*[ebo{1}(u),e{2}(v)] - x*[eb{1}(u),eo{2}(v)] = x*y*(eb{1}(u)*e{2}(v) + e{1}(-u)*eb{2}(v))"),
    q3("q3.E1E13", "[E{1}^1(u),E{1,3}^2(v) - E{1}^2(v)*E{2}^2(v)] = -[E{1}^1(u),E{2}^2(v)]*E{1}^1(u)"),
    q3("q3.E13E2", "[E{1,3}^1(u),E{2}^2(v)] = E{2}^2(v)*[E{1}^1(u),E{2}^2(v)]"),
    q3(
        "q3.E1uE13v",
        "[E{1}^1(u),E{1,3}^2(v)] = dm(P*(E{1}^1(v)-E{1}^1(u))*(E{1,3}^2(v)-E{1,3}^2(u))) + dp(Q*(E{1}^1(-v)-E{1}^1(u))*(E{1,3}^2(v)-E{1,3}^2(-u)))",
    ),
    q3("q3.E1uE13u1", "P*[E{1}^1(u),E{1,3}^2(u)] - Q*[E{1}^1(u),E{1,3}^2(-u)] = 0"),
    q3("q3.E1uE13u2", "2*[E{1}^1(u),E{1,3}^2(u)] = -x*Q*(E{1}^1(u)-E{1}^1(-u))*(E{1,3}^2(u)-E{1,3}^2(-u))"),
    q3(
        "q3.E13uuE2v",
        "[Ec{1,3}^1(u),E{2}^2(v)] = dm((Ec{1,3}^1(v)-Ec{1,3}^1(u))*(E{2}^2(v)-E{2}^2(u))*P) + dp((Ec{1,3}^1(-v)-Ec{1,3}^1(u))*(E{2}^2(v)-E{2}^2(-u))*Q)",
    ),
    q3("q3.E13vvE2v1", "[Ec{1,3}^1(v),E{2}^2(v)]*P + [Ec{1,3}^1(-v),E{2}^2(v)]*Q = 0"),
    q3("q3.E13vvE2v2", "2*[Ec{1,3}^1(v),E{2}^2(v)] = -y*(Ec{1,3}^1(v)-Ec{1,3}^1(-v))*(E{2}^2(v)-E{2}^2(-v))*Q"),
    q3_serre(
        "q3.Serre",
        "dm(P12*[E{a}^1(u)-E{a}^1(v),[E{a}^2(u)-E{a}^2(v),E{b}^3[t]]]) + dp(Q12*[E{a}^1(u)-E{a}^1(-v),[E{a}^2(-u)-E{a}^2(v),E{b}^3[t]]]) = 0",
    ),
    alt(q3_serre("q3.Serre.1", "dm([e{a}(u)-e{a}(v),[e{a}(u)-e{a}(v),e{b}[t]]]) + dp([eb{a}(u)-eb{a}(-v),[eb{a}(-u)-eb{a}(v),e{b}[t]]]) = 0"), "q3.Serre.1"),
    alt(q3_serre("q3.Serre.1.fix", "dm([e{a}(u)-e{a}(v),[e{a}(u)-e{a}(v),e{b}[t]]]) - dp([eb{a}(u)-eb{a}(-v),[eb{a}(-u)-eb{a}(v),e{b}[t]]]) = 0"), "q3.Serre.1"),
    alt(q3_serre("q3.Serre.2", "dm([eb{a}(u)-eb{a}(v),[e{a}(u)-e{a}(v),e{b}[t]]]) - dp([e{a}(u)-e{a}(-v),[eb{a}(-u)-eb{a}(v),e{b}[t]]]) = 0"), "q3.Serre.2"),
    alt(q3_serre("q3.Serre.2.fix", "dm([eb{a}(u)-eb{a}(v),[e{a}(u)-e{a}(v),e{b}[t]]]) + dp([e{a}(u)-e{a}(-v),[eb{a}(-u)-eb{a}(v),e{b}[t]]]) = 0"), "q3.Serre.2"),
    alt(q3_serre("q3.Serre.3", "dm([e{a}(u)-e{a}(v),[eb{a}(u)-eb{a}(v),e{b}[t]]]) + dp([eb{a}(u)-eb{a}(-v),[e{a}(-u)-e{a}(v),e{b}[t]]]) = 0"), "q3.Serre.3"),
    alt(q3_serre("q3.Serre.3.fix", "dm([e{a}(u)-e{a}(v),[eb{a}(u)-eb{a}(v),e{b}[t]]]) - dp([eb{a}(u)-eb{a}(-v),[e{a}(-u)-e{a}(v),e{b}[t]]]) = 0"), "q3.Serre.3"),
    alt(q3_serre("q3.Serre.4", "dm([eb{a}(u)-eb{a}(v),[eb{a}(u)-eb{a}(v),e{b}[t]]]) - dp([e{a}(u)-e{a}(-v),[e{a}(-u)-e{a}(v),e{b}[t]]]) = 0"), "q3.Serre.4"),
    alt(q3_serre("q3.Serre.4.fix", "dm([eb{a}(u)-eb{a}(v),[eb{a}(u)-eb{a}(v),e{b}[t]]]) + dp([e{a}(u)-e{a}(-v),[e{a}(-u)-e{a}(v),e{b}[t]]]) = 0"), "q3.Serre.4"),
    q3_serre("q3.serresim", "P12*[E{a}^1(v),[E{a}^2(v),E{b}^3[t]]] + Q12*[E{a}^1(-v),[E{a}^2(v),E{b}^3[t]]] = 0"),
];

const EMB_PSI1: &[(char, Domain)] = &[('m', Domain::Shift), ('a', Domain::High), ('b', Domain::Rest), ('c', Domain::Rest)];
const EMB_COM: &[(char, Domain)] = &[('m', Domain::Shift), ('a', Domain::Low), ('b', Domain::Low), ('c', Domain::Rest), ('d', Domain::Rest)];
const EMB_RTT: &[(char, Domain)] = &[('m', Domain::Shift), ('a', Domain::Rest), ('b', Domain::Rest), ('c', Domain::Rest), ('d', Domain::Rest)];
const BLOCK_RTT: &[(char, Domain)] = &[('a', Domain::Node), ('b', Domain::Node), ('c', Domain::Node), ('d', Domain::Node)];

const fn emb(id: &'static str, text: &'static str, vars: &'static [(char, Domain)]) -> RelationSpec {
    rel(id, text, vars, Filter::All, 2, Suite::Embedding)
}

/// Relations involving the embeddings.
pub const EMBEDDING: &[RelationSpec] = &[
    rel(
        "rtt.block",
        "[T{a,b}^1(u),T{c,d}^2(v)] = ks(K*T{c,b}^1(u)*T{a,d}^2(v) - T{c,b}^2(v)*T{a,d}^1(u)*K)",
        BLOCK_RTT,
        Filter::All,
        1,
        Suite::Embedding,
    ),
    emb("emb.rtt", "[Psi{m,a,b}^1(u),Psi{m,c,d}^2(v)] = ks(K*Psi{m,c,b}^1(u)*Psi{m,a,d}^2(v) - Psi{m,c,b}^2(v)*Psi{m,a,d}^1(u)*K)", EMB_RTT),
    emb("emb.com", "[T{a,b}^1(u),Psi{m,c,d}^2(v)] = 0", EMB_COM),
    emb("emb.qnpsi1", "[E{m,a}^1(u),Psi{m,b,c}^2(v)] = Psi{m,b,a-m}^2(v)*ks(K*E{m,c+m}^2(v) - E{m,c+m}^1(u)*K)", EMB_PSI1),
    RelationSpec {
        id: "emb.qnpsi2",
        text: "[F{a,m}^1(u),Psi{m,b,c}^2(v)] = ks(F{b+m,m}^2(v)*K - K*F{b+m,m}^1(v))*Psi{m,a-m,c}^2(v)",
        vars: EMB_PSI1,
        filter: Filter::All,
        min_n: 2,
        suite: Suite::Embedding,
        alternative: Some("emb.qnpsi2"),
    },
    RelationSpec {
        id: "emb.qnpsi2.u",
        text: "[F{a,m}^1(u),Psi{m,b,c}^2(v)] = ks(K*F{b+m,m}^1(u) - F{b+m,m}^2(v)*K)*Psi{m,a-m,c}^2(v)",
        vars: EMB_PSI1,
        filter: Filter::All,
        min_n: 2,
        suite: Suite::Embedding,
        alternative: Some("emb.qnpsi2"),
    },
];

/// The whole catalog, in a fixed order.
pub fn catalog() -> Vec<RelationSpec> {
    DRINFELD.iter().chain(RANK_TWO).chain(RANK_THREE).chain(EMBEDDING).copied().collect()
}

/// Looks up an entry by id.
pub fn lookup(id: &str) -> Option<RelationSpec> {
    catalog().into_iter().find(|s| s.id == id)
}

/// All index assignments of a relation at rank `n` and order `L`, after the filter.
pub fn instances(spec: &RelationSpec, n: usize, order: usize) -> Vec<Vec<(char, i64)>> {
    let mut out: Vec<Vec<(char, i64)>> = vec![Vec::new()];
    for &(var, dom) in spec.vars {
        let mut next = Vec::new();
        for binding in out {
            let m = binding.iter().find(|(c, _)| *c == 'm').map(|(_, v)| *v).unwrap_or(0);
            let n = n as i64;
            let range = match dom {
                Domain::Node => 1..=n,
                Domain::Edge => 1..=n - 1,
                Domain::Inner => 1..=n - 2,
                Domain::Coeff => 1..=order as i64,
                Domain::Shift => 1..=n - 1,
                Domain::Low => 1..=m,
                Domain::High => m + 1..=n,
                Domain::Rest => 1..=n - m,
            };
            for v in range {
                let mut b = binding.clone();
                b.push((var, v));
                next.push(b);
            }
        }
        out = next;
    }
    out.retain(|b| {
        let vals: Vec<i64> = b.iter().map(|(_, v)| *v).collect();
        spec.filter.accepts(&vals)
    });
    out
}
