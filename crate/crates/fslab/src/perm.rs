//! Lexicographic permutation ranking over `0..n`, used to index the vertices
//! of explicitly built friends-and-strangers graphs.

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Rank of `perm` in lexicographic order over all permutations of `0..n`.
pub fn rank(perm: &[u8]) -> usize {
    let n = perm.len();
    let mut r = 0;
    for i in 0..n {
        let smaller = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
        r = r * (n - i) + smaller;
    }
    r
}

/// Inverse of [`rank`]; writes the permutation into `out`.
pub fn unrank(n: usize, mut r: usize, out: &mut Vec<u8>) {
    out.clear();
    let mut avail: Vec<u8> = (0..n as u8).collect();
    let mut base = factorial(n);
    for i in 0..n {
        base /= n - i;
        let idx = r / base;
        r %= base;
        out.push(avail.remove(idx));
    }
}

/// Parity of the permutation: `true` for odd (an odd number of inversions).
pub fn is_odd(perm: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Inverse permutation.
pub fn invert(perm: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p as usize] = i as u8;
    }
    inv
}
