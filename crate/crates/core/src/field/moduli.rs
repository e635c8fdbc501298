//! Shipped irreducible moduli (Conway polynomials) for p in {2, 3, 5} and
//! k <= 8. Coefficients are little-endian and include the leading 1.
//! Every modulus is re-verified for irreducibility when a field is built.

pub const SHIPPED: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
    (3, 7, &[1, 0, 2, 0, 0, 0, 0, 1]),
    (3, 8, &[2, 2, 2, 0, 1, 2, 0, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
    (5, 5, &[3, 4, 0, 0, 0, 1]),
    (5, 6, &[2, 0, 1, 4, 1, 0, 1]),
    (5, 7, &[3, 3, 0, 0, 0, 0, 0, 1]),
    (5, 8, &[2, 4, 3, 0, 1, 0, 0, 0, 1]),
];

pub fn shipped(p: u64, k: u32) -> Option<&'static [u64]> {
    SHIPPED
        .iter()
        .find(|(pp, kk, _)| *pp == p && *kk == k)
        .map(|(_, _, m)| *m)
}
