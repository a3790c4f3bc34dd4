//! Casorati determinants of shift families and essential-term counting.
//!
//! A shift family evaluates the matrix `A_ij(x) = g_i(x + j c)` and its
//! tropical determinant (the best assignment). Essential-term searches
//! certify how many terms a max-plus combination really needs, which is
//! the degeneracy count the inequality harness feeds on.
//!
//! ```bash
//! cargo run --example casorati_families
//! ```

use tropnev::{
    casorati_roots_counting, ddg, essential_terms, make_quadrature, CombinationBasis, Monomial,
    ShiftFamily, ShiftStep, TropicalNumber, TropicalPolynomial,
};

fn fin(v: f64) -> TropicalNumber {
    TropicalNumber::from_finite(v)
}

fn main() {
    let base = vec![
        TropicalPolynomial::new(
            1,
            vec![
                Monomial::new(fin(0.0), vec![1.0]),
                Monomial::new(fin(0.0), vec![0.0]),
            ],
        )
        .unwrap(),
        TropicalPolynomial::constant(1, 0.0),
    ];
    let family = ShiftFamily::new(base, ShiftStep::Translate(vec![1.0])).unwrap();

    println!("Casorati matrix at x = 0.5:");
    let m = family.matrix_at(&[0.5]).unwrap();
    for i in 0..family.order() {
        let row: Vec<String> = (0..family.order()).map(|j| m.get(i, j).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }
    println!(
        "tropical determinant: {}",
        family.casorati_eval(&[0.5]).unwrap()
    );

    let quad = make_quadrature(1, 2, 0).unwrap();
    println!("\nroot counting of the determinant function:");
    for &r in &[2.0, 10.0, 50.0] {
        let n = casorati_roots_counting(&family, r, &quad).unwrap();
        println!("  N({r:>4}) = {n:>8.4}   (closed form (r - 1)/2 = {})", (r - 1.0) / 2.0);
    }

    // Three lines, the third buried strictly under the first.
    let basis = vec![
        TropicalPolynomial::new(1, vec![Monomial::new(fin(0.0), vec![1.0])]).unwrap(),
        TropicalPolynomial::constant(1, 0.0),
        TropicalPolynomial::new(1, vec![Monomial::new(fin(-10.0), vec![1.0])]).unwrap(),
    ];
    let comb = CombinationBasis::new(basis.clone(), vec![fin(0.0); 3]).unwrap();
    let ess = essential_terms(&comb, 64);
    println!("\nessential terms of max(x, 0, x - 10):");
    println!("  witnessed: {:?}", ess.witnessed);
    println!("  representation length in [{}, {}]", ess.min_length(), ess.max_length());
    println!("  certified exact: {}", ess.certified_exact);

    let full = CombinationBasis::new(basis[..2].to_vec(), vec![fin(0.0); 2]).unwrap();
    let short = CombinationBasis::new(
        basis[..2].to_vec(),
        vec![fin(0.0), TropicalNumber::BOTTOM],
    )
    .unwrap();
    let est = ddg(&[full, short], 2, 64);
    println!("\ndegeneracy count over two combinations: [{}, {}]", est.lower, est.upper);
}
