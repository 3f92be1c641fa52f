//! Manifold expressions: `K3`, `HP2`, `X(n,k;c)` with `c` an integer or the
//! symbol `c` (the default when omitted), joined by `*` for products.

use std::fmt;

use pontryagin::charclass::{class_hp2, class_k3, class_x, product, CParam, PNumberVector};
use pontryagin::cohomring::RingParams;

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ManifoldExpr {
    K3,
    Hp2,
    X { n: u32, k: u32, c: CParam },
    Product(Box<ManifoldExpr>, Box<ManifoldExpr>),
}

impl ManifoldExpr {
    pub fn parse(input: &str) -> CliResult<Self> {
        let mut p = Parser { src: input, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < input.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }

    /// Real dimension.
    pub fn dimension(&self) -> u32 {
        match self {
            ManifoldExpr::K3 => 4,
            ManifoldExpr::Hp2 => 8,
            ManifoldExpr::X { n, k, .. } => 2 * (n + k),
            ManifoldExpr::Product(a, b) => a.dimension() + b.dimension(),
        }
    }

    pub fn vector(&self) -> CliResult<PNumberVector> {
        Ok(match self {
            ManifoldExpr::K3 => class_k3(),
            ManifoldExpr::Hp2 => class_hp2(),
            ManifoldExpr::X { n, k, c } => class_x(RingParams::new(*n, *k)?, *c)?,
            ManifoldExpr::Product(a, b) => product(&a.vector()?, &b.vector()?),
        })
    }

    /// Every `X` factor with a numeric `c`, as `(n, k, c)`.
    pub fn numeric_x_factors(&self) -> Vec<(u32, u32, i64)> {
        match self {
            ManifoldExpr::X { n, k, c: CParam::Value(v) } => vec![(*n, *k, *v)],
            ManifoldExpr::Product(a, b) => {
                let mut out = a.numeric_x_factors();
                out.extend(b.numeric_x_factors());
                out
            }
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for ManifoldExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldExpr::K3 => write!(f, "K3"),
            ManifoldExpr::Hp2 => write!(f, "HP2"),
            ManifoldExpr::X { n, k, c } => write!(f, "X({n},{k};{c})"),
            ManifoldExpr::Product(a, b) => write!(f, "{a} * {b}"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> CliError {
        CliError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> CliResult<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{token}'")))
        }
    }

    fn expr(&mut self) -> CliResult<ManifoldExpr> {
        let mut lhs = self.term()?;
        while self.eat("*") {
            let rhs = self.term()?;
            lhs = ManifoldExpr::Product(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> CliResult<ManifoldExpr> {
        if self.eat("(") {
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        if self.eat("K3") {
            return Ok(ManifoldExpr::K3);
        }
        if self.eat("HP2") {
            return Ok(ManifoldExpr::Hp2);
        }
        if self.eat("X") {
            self.expect("(")?;
            let n_pos = self.pos;
            let n = self.unsigned()?;
            self.expect(",")?;
            let k = self.unsigned()?;
            let c = if self.eat(";") {
                if self.eat("c") {
                    CParam::Symbolic
                } else {
                    CParam::Value(self.signed()?)
                }
            } else {
                CParam::Symbolic
            };
            self.expect(")")?;
            if n % 2 == 0 || k % 2 == 0 || n < 3 || k < 3 {
                return Err(CliError::Parse {
                    pos: n_pos,
                    msg: format!("X({n},{k}): n and k must be odd and >= 3"),
                });
            }
            return Ok(ManifoldExpr::X { n, k, c });
        }
        self.skip_ws();
        Err(self.error("expected K3, HP2, X(n,k;c) or '('"))
    }

    fn digits(&mut self) -> &str {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        let s = &self.src[self.pos..self.pos + len];
        self.pos += len;
        s
    }

    fn unsigned(&mut self) -> CliResult<u32> {
        let start = self.pos;
        let d = self.digits().to_string();
        d.parse().map_err(|_| CliError::Parse {
            pos: start,
            msg: "expected a nonnegative integer".into(),
        })
    }

    fn signed(&mut self) -> CliResult<i64> {
        let start = self.pos;
        let negative = self.eat("-");
        let d = self.digits().to_string();
        let v: i64 = d.parse().map_err(|_| CliError::Parse {
            pos: start,
            msg: "expected an integer or 'c'".into(),
        })?;
        Ok(if negative { -v } else { v })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products_and_params() {
        let e = ManifoldExpr::parse("K3 * (HP2 * X(3,5;c))").unwrap();
        assert_eq!(e.dimension(), 4 + 8 + 16);
        assert_eq!(e.to_string(), "K3 * HP2 * X(3,5;c)");
        assert_eq!(
            ManifoldExpr::parse(" X( 3 , 3 ; -4 )").unwrap(),
            ManifoldExpr::X { n: 3, k: 3, c: CParam::Value(-4) }
        );
        assert_eq!(
            ManifoldExpr::parse("X(5,3)").unwrap(),
            ManifoldExpr::X { n: 5, k: 3, c: CParam::Symbolic }
        );
    }

    #[test]
    fn reports_positions() {
        match ManifoldExpr::parse("K3 * Y") {
            Err(CliError::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        match ManifoldExpr::parse("X(4,4;c)") {
            Err(CliError::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(ManifoldExpr::parse("K3 K3"), Err(CliError::Parse { pos: 3, .. })));
        assert!(matches!(ManifoldExpr::parse("X(3,3;q)"), Err(CliError::Parse { .. })));
    }
}
