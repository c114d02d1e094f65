//! Mutually orthogonal permutation families of the balanced strings
//! C_{n,n/2} = {γ ∈ {0,1}ⁿ : |γ| = n/2}, built from arc-disjoint cycle
//! covers of the overlap graphs G_{n,k}.
//!
//! For each k ∈ {1,…,n/2} the digraph G_{n,k} connects γ → γ′ exactly when
//! γ and γ′ share n/2−k one-positions; it is C(n/2,k)²-regular, so it
//! decomposes into that many arc-disjoint cycle covers, each of which is a
//! fixed-point-free permutation. Together with the identity (k = 0) this
//! yields C(n,n/2) permutations, pairwise orthogonal: π_i∘π_j⁻¹ has a
//! fixed point only when i = j.

use serde::{Deserialize, Serialize};

use crate::f2::F2Vector;
use crate::{Error, Result};

/// The balanced strings of length n, lexicographically sorted. Permutations
/// in this module act on indices into this list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedStringIndex {
    n: usize,
    strings: Vec<F2Vector>,
}

impl WeightedStringIndex {
    pub fn new(n: usize) -> Result<WeightedStringIndex> {
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::invalid(format!("n must be a positive even integer, got {n}")));
        }
        if n > 24 {
            return Err(Error::SizeGuard { what: "balanced string index", limit: 24, got: n });
        }
        let strings: Vec<F2Vector> = (0..1usize << n)
            .map(|v| F2Vector::from_index(n, v))
            .filter(|v| v.weight() == n / 2)
            .collect();
        debug_assert!(strings.windows(2).all(|w| w[0] < w[1]));
        Ok(WeightedStringIndex { n, strings })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.strings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    pub fn strings(&self) -> &[F2Vector] {
        &self.strings
    }

    pub fn get(&self, i: usize) -> F2Vector {
        self.strings[i]
    }

    pub fn index_of(&self, gamma: &F2Vector) -> Option<usize> {
        self.strings.binary_search(gamma).ok()
    }
}

/// Overlap digraph G_{n,k}: arc γ → γ′ iff the two balanced strings are
/// both 1 at exactly n/2 − k positions. Every undirected edge contributes
/// both arcs, so in- and out-degree coincide.
#[derive(Debug, Clone)]
pub struct OverlapDigraph {
    pub k: usize,
    index: WeightedStringIndex,
    adj: Vec<Vec<usize>>,
}

impl OverlapDigraph {
    pub fn index(&self) -> &WeightedStringIndex {
        &self.index
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    /// Out-neighbors in ascending vertex order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Decompose this graph into its full set of arc-disjoint cycle
    /// covers, one fixed-point-free permutation per unit of degree.
    pub fn cycle_cover_decomposition(&self) -> Result<Vec<Vec<usize>>> {
        decompose_regular_digraph(&self.adj, self.out_degree(0))
    }
}

/// Build G_{n,k} for 1 ≤ k ≤ n/2. The identity class k = 0 has no graph.
pub fn build_overlap_digraph(n: usize, k: usize) -> Result<OverlapDigraph> {
    let index = WeightedStringIndex::new(n)?;
    if k == 0 || k > n / 2 {
        return Err(Error::invalid(format!(
            "overlap class k must satisfy 1 <= k <= n/2, got k={k} for n={n}"
        )));
    }
    let target = n / 2 - k;
    let verts = index.strings();
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|g| {
            (0..verts.len())
                .filter(|&j| g.overlap(&verts[j]) == target)
                .collect()
        })
        .collect();
    Ok(OverlapDigraph { k, index, adj })
}

/// Decompose a d-regular digraph (equal in/out degree d at every vertex,
/// no self-loops) into d arc-disjoint cycle covers, each returned as a
/// fixed-point-free permutation of the vertices.
///
/// Each round extracts a perfect matching between out-sides and in-sides
/// (Hopcroft–Karp with ascending-index tie-breaking, so the output is
/// deterministic) and removes the used arcs, which lowers every degree by
/// exactly one. Regularity makes every round feasible; a failure therefore
/// indicates a bug and is reported, never swallowed.
pub fn decompose_regular_digraph(adj: &[Vec<usize>], d: usize) -> Result<Vec<Vec<usize>>> {
    let nv = adj.len();
    let mut in_degree = vec![0usize; nv];
    for (v, nbrs) in adj.iter().enumerate() {
        if nbrs.len() != d {
            return Err(Error::invalid(format!(
                "digraph is not {d}-out-regular: vertex {v} has out-degree {}",
                nbrs.len()
            )));
        }
        if nbrs.contains(&v) {
            return Err(Error::invalid(format!("self-loop at vertex {v}")));
        }
        for &w in nbrs {
            in_degree[w] += 1;
        }
    }
    if let Some(v) = (0..nv).find(|&v| in_degree[v] != d) {
        return Err(Error::invalid(format!(
            "digraph is not {d}-in-regular: vertex {v} has in-degree {}",
            in_degree[v]
        )));
    }
    let mut remaining: Vec<Vec<usize>> = adj.to_vec();
    let mut covers = Vec::with_capacity(d);
    for round in 0..d {
        let matching = perfect_matching(&remaining).ok_or_else(|| {
            Error::MatchingFailed(format!(
                "no perfect matching in round {round}; input digraph was not regular"
            ))
        })?;
        for (v, &img) in matching.iter().enumerate() {
            let pos = remaining[v]
                .iter()
                .position(|&w| w == img)
                .expect("matched arc exists");
            remaining[v].remove(pos);
        }
        debug_assert!((0..nv).all(|v| matching[v] != v));
        covers.push(matching);
    }
    Ok(covers)
}

/// Perfect matching of the bipartite graph (out-copies → in-copies) by
/// Hopcroft–Karp. Returns `match_of[left] = right`, or None if no perfect
/// matching exists.
fn perfect_matching(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    const FREE: usize = usize::MAX;
    let nv = adj.len();
    let mut match_l = vec![FREE; nv];
    let mut match_r = vec![FREE; nv];

    // Greedy warm start, ascending order.
    for v in 0..nv {
        for &w in &adj[v] {
            if match_r[w] == FREE {
                match_l[v] = w;
                match_r[w] = v;
                break;
            }
        }
    }

    let mut dist = vec![0usize; nv];
    let mut queue = std::collections::VecDeque::new();
    loop {
        // BFS layers from free left vertices.
        queue.clear();
        for v in 0..nv {
            if match_l[v] == FREE {
                dist[v] = 0;
                queue.push_back(v);
            } else {
                dist[v] = FREE;
            }
        }
        let mut found_augmenting = false;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                let u = match_r[w];
                if u == FREE {
                    found_augmenting = true;
                } else if dist[u] == FREE {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        if !found_augmenting {
            break;
        }
        for v in 0..nv {
            if match_l[v] == FREE {
                augment(v, adj, &mut match_l, &mut match_r, &mut dist);
            }
        }
    }
    match_l.iter().all(|&w| w != FREE).then_some(match_l)
}

fn augment(
    v: usize,
    adj: &[Vec<usize>],
    match_l: &mut [usize],
    match_r: &mut [usize],
    dist: &mut [usize],
) -> bool {
    const FREE: usize = usize::MAX;
    for &w in &adj[v] {
        let u = match_r[w];
        if u == FREE || (dist[u] == dist[v].wrapping_add(1) && augment(u, adj, match_l, match_r, dist)) {
            match_l[v] = w;
            match_r[w] = v;
            return true;
        }
    }
    dist[v] = FREE;
    false
}

/// One labelled permutation: `mapping[i]` is the image (as an index into
/// the shared [`WeightedStringIndex`]) and `k` its overlap class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledPermutation {
    pub k: usize,
    pub mapping: Vec<usize>,
}

/// The full family of C(n,n/2) mutually orthogonal permutations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationFamily {
    pub n: usize,
    pub perms: Vec<LabeledPermutation>,
}

impl PermutationFamily {
    pub fn index(&self) -> Result<WeightedStringIndex> {
        WeightedStringIndex::new(self.n)
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    /// Number of permutations carrying each overlap-class label k.
    pub fn class_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.n / 2 + 1];
        for p in &self.perms {
            if p.k < counts.len() {
                counts[p.k] += 1;
            }
        }
        counts
    }

    /// Serialize as `{n, perms: [{k, mapping: [indices]}]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("family serialization cannot fail")
    }

    /// Parse and structurally validate a family (mapping lengths and index
    /// ranges; use [`verify_family`] for the mathematical invariants).
    pub fn from_json(text: &str) -> Result<PermutationFamily> {
        let fam: PermutationFamily =
            serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
        if fam.n == 0 || !fam.n.is_multiple_of(2) || fam.n > 24 {
            return Err(Error::parse(format!("invalid n={}", fam.n)));
        }
        let count = WeightedStringIndex::new(fam.n)?.len();
        for (i, p) in fam.perms.iter().enumerate() {
            if p.mapping.len() != count {
                return Err(Error::parse(format!(
                    "permutation {i} has {} entries, expected {count}",
                    p.mapping.len()
                )));
            }
            let mut seen = vec![false; count];
            for &img in &p.mapping {
                if img >= count || seen[img] {
                    return Err(Error::parse(format!("permutation {i} is not a bijection")));
                }
                seen[img] = true;
            }
        }
        Ok(fam)
    }
}

/// Build the orthogonal permutation family for even n (guarded at n ≤ 12,
/// i.e. 924 vertices). The k = 0 class is the identity; class k
/// contributes the C(n/2,k)² cycle covers of G_{n,k}.
pub fn orthogonal_permutation_family(n: usize) -> Result<PermutationFamily> {
    if n > 12 {
        return Err(Error::SizeGuard { what: "permutation family", limit: 12, got: n });
    }
    let index = WeightedStringIndex::new(n)?;
    let mut perms = vec![LabeledPermutation {
        k: 0,
        mapping: (0..index.len()).collect(),
    }];
    for k in 1..=n / 2 {
        let g = build_overlap_digraph(n, k)?;
        for cover in g.cycle_cover_decomposition()? {
            perms.push(LabeledPermutation { k, mapping: cover });
        }
    }
    Ok(PermutationFamily { n, perms })
}

/// Report from [`verify_family`]: pass/fail plus the first counterexample.
#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub pass: bool,
    pub class_counts: Vec<usize>,
    pub total: usize,
    pub first_failure: Option<String>,
}

/// Certify a family: (i) pairwise orthogonality, (ii) class counts equal
/// C(n/2,k)² with total C(n,n/2), (iii) every mapping respects its
/// overlap class.
pub fn verify_family(fam: &PermutationFamily) -> Result<FamilyReport> {
    let index = fam.index()?;
    let nv = index.len();
    let h = fam.n / 2;
    let mut report = FamilyReport {
        pass: true,
        class_counts: fam.class_counts(),
        total: fam.perms.len(),
        first_failure: None,
    };
    fn fail(report: &mut FamilyReport, msg: String) {
        if report.pass {
            report.pass = false;
            report.first_failure = Some(msg);
        }
    }

    // Class counts: C(h,k)² per class, C(n,h) in total.
    let expected_total = binom(fam.n, h);
    if fam.perms.len() != expected_total {
        fail(
            &mut report,
            format!("family has {} members, expected {expected_total}", fam.perms.len()),
        );
    }
    for k in 0..=h {
        let expect = binom(h, k) * binom(h, k);
        let got = report.class_counts.get(k).copied().unwrap_or(0);
        if got != expect {
            fail(&mut report, format!("class k={k} has {got} members, expected {expect}"));
        }
    }

    // Overlap-class consistency of every arc used.
    for (pi, p) in fam.perms.iter().enumerate() {
        if p.mapping.len() != nv {
            fail(&mut report, format!("permutation {pi} has wrong length"));
            continue;
        }
        for (i, &img) in p.mapping.iter().enumerate() {
            let overlap = index.get(i).overlap(&index.get(img));
            if overlap != h - p.k {
                fail(
                    &mut report,
                    format!(
                        "permutation {pi} (k={}) maps {} to {} with overlap {overlap}, expected {}",
                        p.k,
                        index.get(i),
                        index.get(img),
                        h - p.k
                    ),
                );
            }
        }
    }

    // Pairwise orthogonality: π_i ∘ π_j⁻¹ fixed-point-free for i ≠ j,
    // i.e. the two permutations never agree at a point.
    for i in 0..fam.perms.len() {
        for j in (i + 1)..fam.perms.len() {
            if let Some(x) =
                (0..nv).find(|&x| fam.perms[i].mapping.get(x) == fam.perms[j].mapping.get(x))
            {
                fail(
                    &mut report,
                    format!("permutations {i} and {j} agree at {}", index.get(x)),
                );
            }
        }
    }
    Ok(report)
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// View of a family as permutations of the size-n/2 subsets of an ordered
/// ground set, via indicator strings.
#[derive(Debug, Clone)]
pub struct SubsetPermutationView<'a, T> {
    family: &'a PermutationFamily,
    index: WeightedStringIndex,
    ground: Vec<T>,
}

/// Interpret each permutation as acting on subsets of `ground_set`
/// (|ground_set| must equal n).
pub fn subset_permutation_view<T: Clone>(
    family: &PermutationFamily,
    ground_set: Vec<T>,
) -> Result<SubsetPermutationView<'_, T>> {
    if ground_set.len() != family.n {
        return Err(Error::DimensionMismatch { left: ground_set.len(), right: family.n });
    }
    let index = family.index()?;
    Ok(SubsetPermutationView { family, index, ground: ground_set })
}

impl<T: Clone> SubsetPermutationView<'_, T> {
    pub fn family_len(&self) -> usize {
        self.family.perms.len()
    }

    /// Image of the subset with the given indicator string under
    /// permutation `j`.
    pub fn apply_indicator(&self, j: usize, gamma: &F2Vector) -> Result<F2Vector> {
        let idx = self
            .index
            .index_of(gamma)
            .ok_or_else(|| Error::invalid(format!("{gamma} is not a balanced string")))?;
        Ok(self.index.get(self.family.perms[j].mapping[idx]))
    }

    /// Elements of the ground set selected by an indicator string.
    pub fn subset(&self, gamma: &F2Vector) -> Vec<T> {
        gamma
            .positions_with(1)
            .into_iter()
            .map(|i| self.ground[i].clone())
            .collect()
    }

    /// Image of a subset, as ground-set elements.
    pub fn apply_subset(&self, j: usize, gamma: &F2Vector) -> Result<Vec<T>> {
        Ok(self.subset(&self.apply_indicator(j, gamma)?))
    }
}
