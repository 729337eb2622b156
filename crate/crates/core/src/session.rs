//! An algebra file loaded into the normal-form engine, with parsing and printing of elements.

use std::path::Path;

use crate::algebra_file::AlgebraFile;
use crate::error::{Error, Result};
use crate::expr::parse_element;
use crate::free_assoc::hom_product_explicit;
use crate::pbw::PbwContext;
use crate::tensor::{tensor_concat, TensorElement};

#[derive(Clone, Debug)]
pub struct Session {
    pub file: AlgebraFile,
    pub ctx: PbwContext,
}

impl Session {
    /// Builds the engine; `unchecked` skips the axiom gate.
    pub fn new(file: AlgebraFile, unchecked: bool) -> Result<Self> {
        let g = if unchecked { file.build_unchecked()? } else { file.build()? };
        let ctx = PbwContext::new(&g)?;
        Ok(Self { file, ctx })
    }

    pub fn load(path: &Path, unchecked: bool) -> Result<Self> {
        Self::new(AlgebraFile::read(path)?, unchecked)
    }

    pub fn x_names(&self) -> Vec<String> {
        (0..self.ctx.dim()).map(|i| format!("X{i}")).collect()
    }

    /// Names for elements in engine coordinates: the file's names when the adapted basis is
    /// the given one, `X0, X1, ...` otherwise.
    pub fn names(&self) -> Vec<String> {
        if self.ctx.adapted().is_standard() {
            self.file.basis_names.clone()
        } else {
            self.x_names()
        }
    }

    /// Parses over the basis names, falling back to the `X` names of the adapted basis;
    /// the result is in engine coordinates.
    pub fn parse(&self, s: &str) -> Result<TensorElement> {
        match parse_element(s, &self.file.basis_names) {
            Ok(t) => self.ctx.to_x(&t),
            Err(Error::UnknownName(n)) => parse_element(s, &self.x_names()).map_err(|e| match e {
                Error::UnknownName(_) => Error::UnknownName(n),
                other => other,
            }),
            Err(e) => Err(e),
        }
    }

    pub fn render(&self, t: &TensorElement) -> String {
        t.render(&self.names())
    }

    pub fn render_original(&self, t: &TensorElement) -> Result<String> {
        Ok(self.ctx.from_x(t)?.render(&self.file.basis_names))
    }

    pub fn normal_form(&self, s: &str) -> Result<TensorElement> {
        self.ctx.normal_form_u(&self.parse(s)?)
    }

    /// Normal form of a product; `twisted` picks the Hom product over concatenation.
    pub fn multiply(&self, left: &str, right: &str, twisted: bool) -> Result<TensorElement> {
        let (u, v) = (self.parse(left)?, self.parse(right)?);
        let p = if twisted { hom_product_explicit(self.ctx.module(), &u, &v)? } else { tensor_concat(&u, &v) };
        self.ctx.normal_form_u(&p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn session(g: &crate::HomLieAlgebra) -> Session {
        Session::new(AlgebraFile::from_algebra(g, &fixtures::SL2_NAMES), false).unwrap()
    }

    #[test]
    fn names_follow_adapted_basis() {
        assert_eq!(session(&fixtures::sl2()).names(), ["f", "h", "e"]);
        assert_eq!(session(&fixtures::twisted_sl2()).names(), ["X0", "X1", "X2"]);
    }

    #[test]
    fn both_name_sets_parse() {
        let s = session(&fixtures::twisted_sl2());
        let t = s.parse("2*f").unwrap();
        assert_eq!(s.render(&t), "X0");
        assert_eq!(s.parse("X0").unwrap(), t);
        assert_eq!(s.render_original(&t).unwrap(), "2*f");
        assert!(matches!(s.parse("q"), Err(Error::UnknownName(n)) if n == "q"));
    }
}
