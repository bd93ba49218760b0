/// Even-index Bernoulli numbers B₂, B₄, …, B₃₀.
pub(crate) const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// B_{2k} / (2k)! for k = 1, 2, …
pub(crate) fn bernoulli_over_factorial(k: usize) -> f64 {
    let mut f = 1.0;
    for i in 1..=2 * k {
        f *= i as f64;
    }
    BERNOULLI_EVEN[k - 1] / f
}
