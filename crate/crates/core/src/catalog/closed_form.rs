//! Hypergeometric-type series `e^{-ct} Σ t^{p(n)} Π (a_i(n))! / Π (b_j(n))!`
//! over a finite set of summation indices `n`, described by linear forms.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::CatalogError;

/// `Σ coeffs[i] · n_i + constant` over the summation indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

impl LinearForm {
    pub fn eval(&self, values: &[i64]) -> i64 {
        self.coeffs.iter().zip(values).map(|(c, v)| c * v).sum::<i64>() + self.constant
    }

    /// Parses `2l+m-1`-style text over the given index names.
    pub fn parse(text: &str, names: &[String]) -> Result<Self, CatalogError> {
        let bad = || CatalogError::InvalidClosedForm(alloc::format!("cannot parse linear form '{text}'"));
        let mut form = LinearForm { coeffs: vec![0; names.len()], constant: 0 };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if rest.len() == compact.len() => (1, rest),
                _ => return Err(bad()),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let digits = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
            let (num, name) = term.split_at(digits);
            let k: i64 = if num.is_empty() { 1 } else { num.parse().map_err(|_| bad())? };
            if name.is_empty() {
                if num.is_empty() {
                    return Err(bad());
                }
                form.constant += sign * k;
            } else {
                let i = names.iter().position(|n| n == name).ok_or_else(bad)?;
                form.coeffs[i] += sign * k;
            }
        }
        Ok(form)
    }

    /// Text form over the given index names, inverse to [`LinearForm::parse`].
    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        let parts = self.coeffs.iter().zip(names).map(|(c, n)| (*c, n.as_str())).chain([(self.constant, "")]);
        for (c, name) in parts {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 || name.is_empty() {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(name);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// A summation index running from `max(0, lower...)` to `upper` (inclusive),
/// or unbounded when `upper` is absent. Bounds may use earlier indices only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumIndex {
    pub name: String,
    pub lower: Vec<LinearForm>,
    pub upper: Option<LinearForm>,
}

/// Text description of a [`SumIndex`]: bounds as linear forms.
#[derive(Clone, Copy, Debug)]
pub struct IndexSpec<'a> {
    pub name: &'a str,
    pub lower: &'a [&'a str],
    pub upper: Option<&'a str>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    /// The constant `c` of the prefactor `e^{-ct}`.
    pub exp_decay: u32,
    pub indices: Vec<SumIndex>,
    pub power: LinearForm,
    pub numerator: Vec<LinearForm>,
    pub denominator: Vec<LinearForm>,
}

impl ClosedForm {
    /// Builds a closed form from linear forms written as text over the index names.
    pub fn parse(
        exp_decay: u32,
        indices: &[IndexSpec<'_>],
        power: &str,
        numerator: &[&str],
        denominator: &[&str],
    ) -> Result<Self, CatalogError> {
        let names: Vec<String> = indices.iter().map(|i| i.name.to_string()).collect();
        let forms = |texts: &[&str]| texts.iter().map(|t| LinearForm::parse(t, &names)).collect::<Result<Vec<_>, _>>();
        let indices = indices
            .iter()
            .map(|i| {
                Ok(SumIndex {
                    name: i.name.to_string(),
                    lower: forms(i.lower)?,
                    upper: i.upper.map(|u| LinearForm::parse(u, &names)).transpose()?,
                })
            })
            .collect::<Result<Vec<_>, CatalogError>>()?;
        let cf = ClosedForm {
            exp_decay,
            indices,
            power: LinearForm::parse(power, &names)?,
            numerator: forms(numerator)?,
            denominator: forms(denominator)?,
        };
        cf.check()?;
        Ok(cf)
    }

    pub fn index_names(&self) -> Vec<String> {
        self.indices.iter().map(|i| i.name.clone()).collect()
    }

    fn check(&self) -> Result<(), CatalogError> {
        let n = self.indices.len();
        let invalid = |msg: &str| Err(CatalogError::InvalidClosedForm(msg.into()));
        let forms = self
            .indices
            .iter()
            .flat_map(|i| i.lower.iter().chain(&i.upper))
            .chain([&self.power])
            .chain(&self.numerator)
            .chain(&self.denominator);
        if forms.into_iter().any(|f| f.coeffs.len() != n) {
            return invalid("linear form has the wrong number of coefficients");
        }
        for (k, idx) in self.indices.iter().enumerate() {
            let uses_later = idx.lower.iter().chain(&idx.upper).any(|f| f.coeffs[k..].iter().any(|&c| c != 0));
            if uses_later {
                return invalid("index bounds may only use earlier indices");
            }
            let p = self.power.coeffs[k];
            if p < 0 || (p == 0 && idx.upper.is_none()) {
                return invalid("each unbounded index must raise the power of t");
            }
        }
        if self.power.constant < 0 {
            return invalid("power of t must be nonnegative");
        }
        Ok(())
    }

    /// Coefficients of `t^0 … t^dmax` under the plain reading: the truncated
    /// series of `e^{-ct}` times the sum.
    pub fn series(&self, dmax: usize) -> Result<Vec<BigRational>, CatalogError> {
        self.check()?;
        let mut factorials = Factorials(vec![BigInt::one()]);
        let mut sum = vec![BigRational::zero(); dmax + 1];
        let mut values = vec![0i64; self.indices.len()];
        self.accumulate(0, &mut values, dmax as i64, &mut factorials, &mut sum);
        if self.exp_decay == 0 {
            return Ok(sum);
        }
        let c = BigInt::from(self.exp_decay);
        let decay: Vec<BigRational> = (0..=dmax)
            .map(|k| {
                let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                BigRational::new(sign * c.pow(k as u32), factorials.get(k).clone())
            })
            .collect();
        Ok((0..=dmax).map(|d| (0..=d).map(|k| &decay[k] * &sum[d - k]).sum()).collect())
    }

    fn accumulate(&self, k: usize, values: &mut [i64], dmax: i64, fact: &mut Factorials, sum: &mut [BigRational]) {
        let partial = |values: &[i64]| {
            self.power.coeffs[..k].iter().zip(values.iter()).map(|(c, v)| c * v).sum::<i64>() + self.power.constant
        };
        if k == self.indices.len() {
            let d = self.power.eval(values);
            if (0..=dmax).contains(&d) {
                if let Some(term) = self.term(values, fact) {
                    sum[d as usize] += term;
                }
            }
            return;
        }
        let idx = &self.indices[k];
        let lo = idx.lower.iter().map(|f| f.eval(values)).fold(0, i64::max);
        let p = self.power.coeffs[k];
        let base = partial(values);
        let mut n = lo;
        loop {
            if let Some(u) = &idx.upper {
                if n > u.eval(values) {
                    break;
                }
            }
            if base + p * n > dmax {
                break;
            }
            values[k] = n;
            self.accumulate(k + 1, values, dmax, fact, sum);
            n += 1;
        }
        values[k] = 0;
    }

    /// The summand at `values`; `None` when a factorial argument is negative.
    fn term(&self, values: &[i64], fact: &mut Factorials) -> Option<BigRational> {
        let mut num = BigInt::one();
        for f in &self.numerator {
            num *= fact.get(usize::try_from(f.eval(values)).ok()?);
        }
        let mut den = BigInt::one();
        for f in &self.denominator {
            den *= fact.get(usize::try_from(f.eval(values)).ok()?);
        }
        Some(BigRational::new(num, den))
    }
}

/// Factorials computed on demand.
struct Factorials(Vec<BigInt>);

impl Factorials {
    fn get(&mut self, n: usize) -> &BigInt {
        while self.0.len() <= n {
            let next = self.0.last().expect("0! is present") * BigInt::from(self.0.len());
            self.0.push(next);
        }
        &self.0[n]
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.index_names();
        if self.exp_decay > 0 {
            write!(f, "e^(-{}t) ", self.exp_decay)?;
        }
        for idx in &self.indices {
            let mut lower: Vec<String> = idx.lower.iter().map(|l| l.render(&names)).collect();
            let lo = if lower.is_empty() {
                "0".to_string()
            } else {
                lower.push("0".to_string());
                alloc::format!("max({})", lower.join(","))
            };
            let hi = idx.upper.as_ref().map_or("inf".to_string(), |u| u.render(&names));
            write!(f, "sum[{}={lo}..{hi}] ", idx.name)?;
        }
        let facts = |forms: &[LinearForm]| {
            forms.iter().map(|l| alloc::format!("({})!", l.render(&names))).collect::<Vec<_>>().join("")
        };
        write!(f, "t^({}) {} / {}", self.power.render(&names), facts(&self.numerator), facts(&self.denominator))
    }
}
