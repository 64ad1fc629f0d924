use std::fmt;

/// Permutation of `{0, …, n-1}` in one-line notation: `w[j]` is the image
/// of `j`. The simple reflection `s_i` swaps `i` and `i+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(Perm(images))
    }

    pub fn simple(n: usize, i: usize) -> Self {
        Perm::identity(n).left_mul_simple(i)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, v)| j == *v)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count())
            .sum()
    }

    pub fn position(&self, value: usize) -> usize {
        self.0.iter().position(|v| *v == value).expect("value in range")
    }

    /// `s_i ∘ w`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Perm {
        Perm(
            self.0
                .iter()
                .map(|&v| match v {
                    v if v == i => i + 1,
                    v if v == i + 1 => i,
                    v => v,
                })
                .collect(),
        )
    }

    /// Whether `l(s_i w) < l(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.position(i) > self.position(i + 1)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (j, &v) in self.0.iter().enumerate() {
            inv[v] = j;
        }
        Perm(inv)
    }

    /// Lexicographically minimal reduced word `[i1, …, ik]` with
    /// `w = s_{i1} ⋯ s_{ik}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = (0..w.n().saturating_sub(1)).find(|&i| w.has_left_descent(i)) {
            word.push(i);
            w = w.left_mul_simple(i);
        }
        word
    }

    /// Every permutation of `n` letters, lexicographic in one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if current.len() == n {
                out.push(Perm(current.clone()));
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    current.push(v);
                    rec(n, current, used, out);
                    current.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }
}

/// Value blocks of a composition: block `k` holds the values
/// `α_1+…+α_{k-1} .. α_1+…+α_k`.
pub fn block_of(alpha: &[usize]) -> Vec<usize> {
    alpha
        .iter()
        .enumerate()
        .flat_map(|(k, &len)| std::iter::repeat(k).take(len))
        .collect()
}

/// Whether `s_i` lies in the Young subgroup `W_α` (values `i`, `i+1` share a
/// block).
pub fn in_parabolic(alpha: &[usize], i: usize) -> bool {
    let blocks = block_of(alpha);
    blocks[i] == blocks[i + 1]
}

/// Minimal-length representatives `d` of `W_α \ W`: within each block the
/// values appear in increasing position order. Sorted by length, then
/// lexicographically.
pub fn coset_representatives(alpha: &[usize]) -> Vec<Perm> {
    let n = alpha.iter().sum();
    let blocks = block_of(alpha);
    let mut reps: Vec<Perm> = Perm::all(n)
        .into_iter()
        .filter(|d| (0..n.saturating_sub(1)).all(|i| blocks[i] != blocks[i + 1] || !d.has_left_descent(i)))
        .collect();
    reps.sort_by_key(|d| d.length());
    reps
}

/// Writes `w = u ∘ d` with `u ∈ W_α` and `d` a minimal representative;
/// lengths add.
pub fn parabolic_decomposition(alpha: &[usize], w: &Perm) -> (Perm, Perm) {
    let n = w.n();
    let blocks = block_of(alpha);
    let mut d = vec![0; n];
    let mut next_value: Vec<usize> = alpha
        .iter()
        .scan(0, |acc, &len| {
            let start = *acc;
            *acc += len;
            Some(start)
        })
        .collect();
    for (pos, &v) in w.images().iter().enumerate() {
        let b = blocks[v];
        d[pos] = next_value[b];
        next_value[b] += 1;
    }
    let d = Perm(d);
    let u = w.compose(&d.inverse());
    (u, d)
}
