use std::fmt;

use super::SingularityError;
use crate::poly::Polynomial;

/// Compact part of the boundary of the Newton polygon of a plane curve germ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonDiagram2D {
    /// Sorted by first coordinate; second coordinates strictly decrease.
    pub vertices: Vec<(u32, u32)>,
    pub convenient: bool,
}

impl fmt::Display for NewtonDiagram2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .vertices
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        write!(f, "{}", pts.join(" "))?;
        if self.convenient {
            write!(f, " convenient")
        } else {
            write!(f, " not convenient")
        }
    }
}

fn cross(o: (u32, u32), a: (u32, u32), b: (u32, u32)) -> i64 {
    let (ox, oy) = (i64::from(o.0), i64::from(o.1));
    (i64::from(a.0) - ox) * (i64::from(b.1) - oy) - (i64::from(a.1) - oy) * (i64::from(b.0) - ox)
}

pub fn newton_diagram_2d(f: &Polynomial) -> Result<NewtonDiagram2D, SingularityError> {
    if f.nvars() != 2 {
        return Err(SingularityError::WrongVariableCount {
            expected: 2,
            got: f.nvars(),
        });
    }
    if f.is_zero() {
        return Err(SingularityError::ZeroPolynomial);
    }
    let mut pts: Vec<(u32, u32)> = f
        .monomials()
        .map(|m| (m.exponents()[0], m.exponents()[1]))
        .collect();
    pts.sort();
    // lower hull, then keep the part with negative slopes
    let mut hull: Vec<(u32, u32)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let mut vertices = vec![hull[0]];
    for &p in &hull[1..] {
        if p.1 < vertices[vertices.len() - 1].1 {
            vertices.push(p);
        } else {
            break;
        }
    }
    let convenient = vertices[0].0 == 0 && vertices[vertices.len() - 1].1 == 0;
    Ok(NewtonDiagram2D {
        vertices,
        convenient,
    })
}

/// `2S − a − b + 1`, with `S` the area under the diagram and `a`, `b` its
/// intercepts on the two axes.
pub fn newton_number_2d(d: &NewtonDiagram2D) -> Result<i64, SingularityError> {
    if !d.convenient {
        return Err(SingularityError::NotConvenient);
    }
    let b = i64::from(d.vertices[0].1);
    let a = i64::from(d.vertices[d.vertices.len() - 1].0);
    // shoelace over the polygon origin, (a,0), ..., (0,b)
    let mut poly: Vec<(i64, i64)> = vec![(0, 0)];
    poly.extend(
        d.vertices
            .iter()
            .rev()
            .map(|&(x, y)| (i64::from(x), i64::from(y))),
    );
    let twice_area: i64 = (0..poly.len())
        .map(|i| {
            let (x1, y1) = poly[i];
            let (x2, y2) = poly[(i + 1) % poly.len()];
            x1 * y2 - x2 * y1
        })
        .sum();
    Ok(twice_area.abs() - a - b + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grobner::milnor_number;
    use crate::poly::parse_polynomial;

    fn diagram(s: &str) -> NewtonDiagram2D {
        newton_diagram_2d(&parse_polynomial(s, &["x", "y"]).unwrap()).unwrap()
    }

    #[test]
    fn diagrams() {
        let d = diagram("x^3 + y^2");
        assert_eq!(d.vertices, vec![(0, 2), (3, 0)]);
        assert!(d.convenient);
        let d = diagram("x^5 + x^2*y^2 + y^5");
        assert_eq!(d.vertices, vec![(0, 5), (2, 2), (5, 0)]);
        assert!(d.convenient);
        let d = diagram("x^2*y + y^3");
        assert_eq!(d.vertices, vec![(0, 3), (2, 1)]);
        assert!(!d.convenient);
    }

    #[test]
    fn interior_and_collinear_points_are_dropped() {
        assert_eq!(
            diagram("x^4 + x^2*y^2 + y^4").vertices,
            vec![(0, 4), (4, 0)]
        );
        assert_eq!(
            diagram("x^4 + x^3*y^3 + y^4 + x*y^3").vertices,
            vec![(0, 4), (4, 0)]
        );
        assert_eq!(
            diagram("x^6 + x*y + y^6").vertices,
            vec![(0, 6), (1, 1), (6, 0)]
        );
    }

    #[test]
    fn errors() {
        let f = parse_polynomial("x^2", &["x"]).unwrap();
        assert!(matches!(
            newton_diagram_2d(&f),
            Err(SingularityError::WrongVariableCount {
                expected: 2,
                got: 1
            })
        ));
        let z = parse_polynomial("0", &["x", "y"]).unwrap();
        assert_eq!(newton_diagram_2d(&z), Err(SingularityError::ZeroPolynomial));
        assert_eq!(
            newton_number_2d(&diagram("x^2*y + y^3")),
            Err(SingularityError::NotConvenient)
        );
    }

    #[test]
    fn newton_numbers() {
        assert_eq!(newton_number_2d(&diagram("x^3 + y^2")).unwrap(), 2);
        assert_eq!(newton_number_2d(&diagram("x^3 + y^4")).unwrap(), 6);
        assert_eq!(
            newton_number_2d(&diagram("x^5 + x^2*y^2 + y^5")).unwrap(),
            11
        );
        for s in [
            "x^3 + y^5",
            "x^7 + y^2",
            "x^4 + x^2*y^2 + y^4",
            "x^6 + x*y + y^6",
        ] {
            let f = parse_polynomial(s, &["x", "y"]).unwrap();
            let nu = newton_number_2d(&newton_diagram_2d(&f).unwrap()).unwrap();
            assert_eq!(nu as usize, milnor_number(&f).unwrap(), "{s}");
        }
    }
}
