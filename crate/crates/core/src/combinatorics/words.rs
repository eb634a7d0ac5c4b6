//! Shuffles of words.

/// All interleavings of `a` and `b`, listed with multiplicity.
pub fn shuffle<T: Clone>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(a.len() + b.len());
    fn rec<T: Clone>(a: &[T], b: &[T], cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if a.is_empty() && b.is_empty() {
            out.push(cur.clone());
            return;
        }
        if let Some((x, rest)) = a.split_first() {
            cur.push(x.clone());
            rec(rest, b, cur, out);
            cur.pop();
        }
        if let Some((y, rest)) = b.split_first() {
            cur.push(y.clone());
            rec(a, rest, cur, out);
            cur.pop();
        }
    }
    rec(a, b, &mut cur, &mut out);
    out
}

/// Iterated shuffle of several words.
pub fn shuffle_many<T: Clone>(words: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut acc: Vec<Vec<T>> = vec![Vec::new()];
    for w in words {
        acc = acc.iter().flat_map(|u| shuffle(u, w)).collect();
    }
    acc
}
