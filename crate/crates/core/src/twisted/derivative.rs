use crate::diagram::{eval_term, Presentation, Term};
use crate::error::TwistedError;
use crate::quandle::AlexanderPairTable;
use crate::ring::{elementary_ideal, GroupRingElem, IdealGens, RingMatrix};

/// A presentation with a homomorphism `ρ` to a finite quandle, given on
/// generators, and an Alexander pair on that quandle.
#[derive(Debug, Clone)]
pub struct DerivativeContext {
    presentation: Presentation,
    images: Vec<usize>,
    pair: AlexanderPairTable,
}

impl DerivativeContext {
    /// Checks that every relator holds under the images.
    pub fn new(presentation: Presentation, images: Vec<usize>, pair: AlexanderPairTable) -> Result<Self, TwistedError> {
        if images.len() != presentation.n_gens() {
            return Err(TwistedError::ImageCount { expected: presentation.n_gens(), got: images.len() });
        }
        let q = pair.quandle();
        if let Some(&x) = images.iter().find(|&&x| x >= q.order()) {
            return Err(crate::error::QuandleError::OutOfRange(x).into());
        }
        if let Some(index) = presentation.first_failing_relator(q, &images) {
            let (l, r) = &presentation.relators()[index];
            return Err(TwistedError::InvalidHom {
                index,
                relator: format!("({l} , {r})"),
                lhs: eval_term(l, &images, q),
                rhs: eval_term(r, &images, q),
            });
        }
        Ok(Self { presentation, images, pair })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn pair(&self) -> &AlexanderPairTable {
        &self.pair
    }

    /// Value of `t` under `ρ` and its derivative with respect to `x_j`.
    fn value_and_derivative(&self, t: &Term, j: usize) -> (usize, GroupRingElem) {
        let g = self.pair.group();
        match t {
            Term::Gen(i) => {
                let d = if *i == j { GroupRingElem::one(g) } else { GroupRingElem::zero(g) };
                (self.images[*i], d)
            }
            Term::Op(l, r, positive) => {
                let (x, dx) = self.value_and_derivative(l, j);
                let (y, dy) = self.value_and_derivative(r, j);
                let q = self.pair.quandle();
                if *positive {
                    let d = &(self.pair.f1(x, y) * &dx) + &(self.pair.f2(x, y) * &dy);
                    (q.op(x, y), d)
                } else {
                    // x = w * y, so dx = f1(w,y) dw + f2(w,y) dy
                    let w = q.inv_op(x, y);
                    let inv = self.pair.f1_inv(w, y);
                    let d = inv * &(&dx - &(self.pair.f2(w, y) * &dy));
                    (w, d)
                }
            }
        }
    }

    /// The `f∘ρ`-derivative of `t` with respect to generator `j`.
    pub fn derive(&self, t: &Term, j: usize) -> Result<GroupRingElem, TwistedError> {
        if j >= self.presentation.n_gens() {
            return Err(TwistedError::Generator(j));
        }
        if t.max_gen() >= self.presentation.n_gens() {
            return Err(TwistedError::Generator(t.max_gen()));
        }
        Ok(self.value_and_derivative(t, j).1)
    }

    /// `∂r_1 - ∂r_2` for the relator `r = (r_1, r_2)`.
    pub fn relator_derivative(&self, r: &(Term, Term), j: usize) -> Result<GroupRingElem, TwistedError> {
        Ok(&self.derive(&r.0, j)? - &self.derive(&r.1, j)?)
    }

    /// Relators by generators matrix of relator derivatives.
    pub fn twisted_matrix(&self) -> Result<RingMatrix, TwistedError> {
        let p = &self.presentation;
        let mut m = RingMatrix::zeros(self.pair.group(), p.relators().len(), p.n_gens());
        for (i, r) in p.relators().iter().enumerate() {
            for j in 0..p.n_gens() {
                m.set(i, j, self.relator_derivative(r, j)?);
            }
        }
        Ok(m)
    }

    /// `E_d` of the twisted matrix.
    pub fn twisted_ideals(&self, d: i64, max_dim: usize) -> Result<IdealGens, TwistedError> {
        Ok(elementary_ideal(&self.twisted_matrix()?, d, max_dim)?)
    }
}

/// `n_gens - n_relators`, a lower bound for the deficiency of the presented quandle.
pub fn deficiency_bound(p: &Presentation) -> i64 {
    p.deficiency()
}
