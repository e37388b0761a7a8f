// SPDX-License-Identifier: Apache-2.0

//! SVG path data (`d` attribute) to closed contours.
//!
//! Supported: `M L H V C Q Z` in absolute and relative form, implicit
//! command repetition, and numbers with optional sign, fraction and
//! exponent separated by whitespace or commas. Each Bézier segment becomes
//! [`BEZIER_CHORDS`] chords of equal parameter length. Every subpath must be
//! closed with `Z`.

use num_complex::Complex64;

use crate::contour::Contour;
use crate::error::{Error, Result};

pub const BEZIER_CHORDS: usize = 16;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { src: text.as_bytes(), pos: 0 }
    }

    fn skip_separators(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_whitespace() || self.src[self.pos] == b',') {
            self.pos += 1;
        }
    }

    fn at_number(&mut self) -> bool {
        self.skip_separators();
        matches!(self.src.get(self.pos), Some(b'0'..=b'9' | b'.' | b'-' | b'+'))
    }

    /// Next command letter and its byte offset.
    fn next_command(&mut self) -> Result<Option<(usize, u8)>> {
        self.skip_separators();
        let start = self.pos;
        let Some(&b) = self.src.get(start) else {
            return Ok(None);
        };
        match b {
            b'M' | b'm' | b'L' | b'l' | b'H' | b'h' | b'V' | b'v' | b'C' | b'c' | b'Q' | b'q' | b'Z' | b'z' => {
                self.pos += 1;
                Ok(Some((start, b)))
            }
            b'0'..=b'9' | b'.' | b'-' | b'+' => {
                Err(Error::UnsupportedCommand { token: "<number without command>".into(), offset: start })
            }
            _ => Err(self.unsupported(start)),
        }
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_separators();
        let start = self.pos;
        let s = self.src;
        let mut i = start;
        if matches!(s.get(i), Some(b'+' | b'-')) {
            i += 1;
        }
        let int_start = i;
        while matches!(s.get(i), Some(b'0'..=b'9')) {
            i += 1;
        }
        let mut digits = i - int_start;
        if s.get(i) == Some(&b'.') {
            i += 1;
            let frac_start = i;
            while matches!(s.get(i), Some(b'0'..=b'9')) {
                i += 1;
            }
            digits += i - frac_start;
        }
        if digits == 0 {
            return Err(self.unsupported(start));
        }
        if matches!(s.get(i), Some(b'e' | b'E')) {
            let mut k = i + 1;
            if matches!(s.get(k), Some(b'+' | b'-')) {
                k += 1;
            }
            let exp_start = k;
            while matches!(s.get(k), Some(b'0'..=b'9')) {
                k += 1;
            }
            if k > exp_start {
                i = k;
            }
        }
        self.pos = i;
        // The scanned slice is ASCII by construction.
        let text = std::str::from_utf8(&s[start..i]).expect("ascii");
        text.parse::<f64>().map_err(|_| self.unsupported(start))
    }

    fn unsupported(&self, offset: usize) -> Error {
        let end = self.src[offset..]
            .iter()
            .position(|b| b.is_ascii_whitespace() || *b == b',')
            .map_or(self.src.len(), |p| offset + p)
            .max(offset + 1)
            .min(self.src.len());
        let token = String::from_utf8_lossy(&self.src[offset..end]).into_owned();
        if token.is_empty() {
            Error::UnsupportedCommand { token: "<end of input>".into(), offset }
        } else {
            Error::UnsupportedCommand { token, offset }
        }
    }

    fn expect_number(&mut self) -> Result<f64> {
        self.skip_separators();
        if self.pos >= self.src.len() {
            return Err(Error::UnsupportedCommand { token: "<end of input>".into(), offset: self.pos });
        }
        self.number()
    }

    fn expect_point(&mut self) -> Result<Complex64> {
        let x = self.expect_number()?;
        let y = self.expect_number()?;
        Ok(Complex64::new(x, y))
    }
}

struct Builder {
    contours: Vec<Contour>,
    current: Vec<Complex64>,
    subpath_offset: usize,
    cursor: Option<Complex64>,
    start: Complex64,
}

impl Builder {
    fn move_to(&mut self, p: Complex64, offset: usize) -> Result<()> {
        if !self.current.is_empty() {
            return Err(Error::UnclosedSubpath { offset: self.subpath_offset });
        }
        self.current.push(p);
        self.subpath_offset = offset;
        self.cursor = Some(p);
        self.start = p;
        Ok(())
    }

    /// Current point for a drawing command, reopening a subpath after `Z`.
    fn pen(&mut self, offset: usize, cmd: u8) -> Result<Complex64> {
        let p = self.cursor.ok_or_else(|| Error::UnsupportedCommand {
            token: (cmd as char).to_string(),
            offset,
        })?;
        if self.current.is_empty() {
            self.current.push(p);
            self.subpath_offset = offset;
            self.start = p;
        }
        Ok(p)
    }

    fn line_to(&mut self, p: Complex64) {
        self.current.push(p);
        self.cursor = Some(p);
    }

    fn close(&mut self) -> Result<()> {
        if self.current.is_empty() {
            return Ok(());
        }
        let vertices = std::mem::take(&mut self.current);
        self.contours.push(Contour::new(vertices)?);
        self.cursor = Some(self.start);
        Ok(())
    }
}

fn cubic(p0: Complex64, p1: Complex64, p2: Complex64, p3: Complex64, t: f64) -> Complex64 {
    let s = 1.0 - t;
    p0 * (s * s * s) + p1 * (3.0 * s * s * t) + p2 * (3.0 * s * t * t) + p3 * (t * t * t)
}

fn quadratic(p0: Complex64, p1: Complex64, p2: Complex64, t: f64) -> Complex64 {
    let s = 1.0 - t;
    p0 * (s * s) + p1 * (2.0 * s * t) + p2 * (t * t)
}

/// Parses path data into one contour per closed subpath.
pub fn parse_svg_path(text: &str) -> Result<Vec<Contour>> {
    let mut lx = Lexer::new(text);
    let mut b = Builder {
        contours: Vec::new(),
        current: Vec::new(),
        subpath_offset: 0,
        cursor: None,
        start: Complex64::new(0.0, 0.0),
    };

    while let Some((offset, cmd)) = lx.next_command()? {
        let relative = cmd.is_ascii_lowercase();
        match cmd.to_ascii_uppercase() {
            b'M' => {
                let mut p = lx.expect_point()?;
                if relative {
                    p += b.cursor.unwrap_or_default();
                }
                b.move_to(p, offset)?;
                while lx.at_number() {
                    let mut q = lx.expect_point()?;
                    if relative {
                        q += b.cursor.unwrap_or_default();
                    }
                    b.line_to(q);
                }
            }
            b'L' => loop {
                let cur = b.pen(offset, cmd)?;
                let q = lx.expect_point()?;
                b.line_to(if relative { cur + q } else { q });
                if !lx.at_number() {
                    break;
                }
            },
            b'H' => loop {
                let cur = b.pen(offset, cmd)?;
                let x = lx.expect_number()?;
                b.line_to(Complex64::new(if relative { cur.re + x } else { x }, cur.im));
                if !lx.at_number() {
                    break;
                }
            },
            b'V' => loop {
                let cur = b.pen(offset, cmd)?;
                let y = lx.expect_number()?;
                b.line_to(Complex64::new(cur.re, if relative { cur.im + y } else { y }));
                if !lx.at_number() {
                    break;
                }
            },
            b'C' => loop {
                let p0 = b.pen(offset, cmd)?;
                let base = if relative { p0 } else { Complex64::new(0.0, 0.0) };
                let p1 = base + lx.expect_point()?;
                let p2 = base + lx.expect_point()?;
                let p3 = base + lx.expect_point()?;
                for i in 1..=BEZIER_CHORDS {
                    let t = i as f64 / BEZIER_CHORDS as f64;
                    b.line_to(if i == BEZIER_CHORDS { p3 } else { cubic(p0, p1, p2, p3, t) });
                }
                if !lx.at_number() {
                    break;
                }
            },
            b'Q' => loop {
                let p0 = b.pen(offset, cmd)?;
                let base = if relative { p0 } else { Complex64::new(0.0, 0.0) };
                let p1 = base + lx.expect_point()?;
                let p2 = base + lx.expect_point()?;
                for i in 1..=BEZIER_CHORDS {
                    let t = i as f64 / BEZIER_CHORDS as f64;
                    b.line_to(if i == BEZIER_CHORDS { p2 } else { quadratic(p0, p1, p2, t) });
                }
                if !lx.at_number() {
                    break;
                }
            },
            b'Z' => b.close()?,
            _ => unreachable!("lexer only yields supported commands"),
        }
    }

    if !b.current.is_empty() {
        return Err(Error::UnclosedSubpath { offset: b.subpath_offset });
    }
    if b.contours.is_empty() {
        return Err(Error::EmptyPath);
    }
    Ok(b.contours)
}

/// Collects contours from the `d` attribute of every `<path>` element of an
/// SVG document, in document order. Transforms are not applied.
pub fn parse_svg_document(text: &str) -> Result<Vec<Contour>> {
    let doc = roxmltree::Document::parse(text).map_err(|e| Error::Format(format!("SVG: {e}")))?;
    let mut contours = Vec::new();
    for node in doc.descendants().filter(|n| n.has_tag_name("path")) {
        if let Some(d) = node.attribute("d") {
            contours.extend(parse_svg_path(d)?);
        }
    }
    if contours.is_empty() {
        return Err(Error::EmptyPath);
    }
    Ok(contours)
}
