//! Exhaustive enumeration of short braid words.

use crate::braid::BraidWord;

/// Every word of length `<= max_len` on `m` strands, shortest first, letters
/// ordered `-(m-1), ..., -1, 1, ..., m-1` lexicographically.
pub fn words_on(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let g = strands as i64 - 1;
    let alphabet: Vec<i64> = (-g..=g).filter(|&t| t != 0).collect();
    let mut out = vec![BraidWord::from_signed(strands, &[]).expect("empty word")];
    let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_len {
        if alphabet.is_empty() {
            break;
        }
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for &t in &alphabet {
                let mut v = w.clone();
                v.push(t);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|v| BraidWord::from_signed(strands, v).expect("letters in range")));
        layer = next;
    }
    out
}

/// Words of length `<= max_len` on `1..=max_strands` strands whose closure is a knot.
pub fn knot_words(max_strands: usize, max_len: usize) -> Vec<BraidWord> {
    (1..=max_strands)
        .flat_map(|m| words_on(m, max_len))
        .filter(BraidWord::is_knot_closure)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(words_on(1, 6).len(), 1);
        assert_eq!(words_on(2, 3).len(), 1 + 2 + 4 + 8);
        assert_eq!(words_on(3, 2).len(), 1 + 4 + 16);
        // On two strands the knots are exactly the odd-length words.
        assert_eq!(knot_words(2, 4).len(), 1 + 2 + 8);
    }
}
