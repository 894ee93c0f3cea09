//! Words in a free group: letters are nonzero signed 1-based generator
//! numbers, `-k` standing for the inverse of generator `k`.

pub type Word = Vec<i32>;

/// Freely reduced product of `parts`.
pub fn product<'a, I: IntoIterator<Item = &'a [i32]>>(parts: I) -> Word {
    let mut out: Word = Vec::new();
    for part in parts {
        for &x in part {
            push_letter(&mut out, x);
        }
    }
    out
}

fn push_letter(w: &mut Word, x: i32) {
    debug_assert!(x != 0);
    if w.last() == Some(&-x) {
        w.pop();
    } else {
        w.push(x);
    }
}

pub fn reduce(w: &[i32]) -> Word {
    product([w])
}

pub fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|&x| -x).collect()
}

/// u·v·u⁻¹.
pub fn conjugate(u: &[i32], v: &[i32]) -> Word {
    product([u, v, &inverse(u)])
}

/// Exponent sum of every generator.
pub fn exponent_sums(w: &[i32], generators: usize) -> Vec<i64> {
    let mut out = vec![0i64; generators];
    for &x in w {
        out[x.unsigned_abs() as usize - 1] += x.signum() as i64;
    }
    out
}

pub fn max_generator(w: &[i32]) -> usize {
    w.iter().map(|x| x.unsigned_abs() as usize).max().unwrap_or(0)
}
