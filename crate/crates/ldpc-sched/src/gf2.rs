//! Bit-packed GF(2) matrices backing encoding, syndromes and systematization.

const WORD_BITS: usize = 64;

/// Dense binary matrix with 64 columns packed per word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(WORD_BITS);
        BitMatrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        let word = self.data[r * self.words_per_row + c / WORD_BITS];
        (word >> (c % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let word = &mut self.data[r * self.words_per_row + c / WORD_BITS];
        let mask = 1u64 << (c % WORD_BITS);
        if bit {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    /// XORs row `src` into row `dst`.
    pub fn xor_rows(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let w = self.words_per_row;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * w);
            (&mut lo[dst * w..dst * w + w], &hi[..w])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * w);
            (&mut hi[..w], &lo[src * w..src * w + w])
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x ^= *y;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for i in 0..w {
            self.data.swap(a * w + i, b * w + i);
        }
    }

    /// XORs a whole packed row vector into an accumulator of the same width.
    pub fn xor_row_into(&self, r: usize, acc: &mut [u64]) {
        for (x, y) in acc.iter_mut().zip(self.row(r)) {
            *x ^= *y;
        }
    }
}

/// Parity of the popcount of `a AND b`; the GF(2) dot product of two rows.
pub(crate) fn parity_of_and(a: &[u64], b: &[u64]) -> u8 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0u64;
    for (x, y) in a.iter().zip(b) {
        acc ^= x & y;
    }
    (acc.count_ones() & 1) as u8
}

/// Unpacks the first `n` bits of a packed row into 0/1 bytes.
pub(crate) fn unpack_bits(words: &[u64], n: usize) -> Vec<u8> {
    (0..n)
        .map(|j| ((words[j / WORD_BITS] >> (j % WORD_BITS)) & 1) as u8)
        .collect()
}

/// Packs 0/1 bytes into 64-bit words.
pub(crate) fn pack_bits(bits: &[u8]) -> Vec<u64> {
    let mut words = vec![0u64; bits.len().div_ceil(WORD_BITS)];
    for (j, &b) in bits.iter().enumerate() {
        if b != 0 {
            words[j / WORD_BITS] |= 1u64 << (j % WORD_BITS);
        }
    }
    words
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_roundtrip() {
        let mut m = BitMatrix::zeros(3, 70);
        m.set(0, 0, true);
        m.set(1, 63, true);
        m.set(2, 69, true);
        assert!(m.get(0, 0));
        assert!(m.get(1, 63));
        assert!(m.get(2, 69));
        assert!(!m.get(0, 1));
        m.set(1, 63, false);
        assert!(!m.get(1, 63));
    }

    #[test]
    fn xor_and_swap() {
        let mut m = BitMatrix::zeros(2, 8);
        m.set(0, 1, true);
        m.set(1, 1, true);
        m.set(1, 3, true);
        m.xor_rows(0, 1);
        assert!(!m.get(0, 1));
        assert!(m.get(0, 3));
        m.swap_rows(0, 1);
        assert!(m.get(0, 1));
        assert!(!m.get(1, 1));
    }

    #[test]
    fn dot_parity() {
        let a = pack_bits(&[1, 0, 1, 1]);
        let b = pack_bits(&[1, 1, 0, 1]);
        assert_eq!(parity_of_and(&a, &b), 0); // overlap at 0 and 3
        let c = pack_bits(&[1, 0, 0, 0]);
        assert_eq!(parity_of_and(&a, &c), 1);
    }

    #[test]
    fn pack_unpack() {
        let bits = vec![1, 0, 0, 1, 1, 0, 1];
        assert_eq!(unpack_bits(&pack_bits(&bits), bits.len()), bits);
    }
}
