//! Closed-form areas of the circle regions whose emptiness characterizes a
//! useful-1 edge: the lens halves `A_w`, `A_t` and the crescents `B_w`, `B_t`
//! cut from the two witness circumcircles by the edge's supporting line.

use std::f64::consts::PI;

/// Area of the minor circular segment cut by a chord of length `ell` from a
/// circle of radius `r`:
/// `r^2 arcsin(ell / 2r) - (ell / 2) sqrt(r^2 - ell^2 / 4)`.
///
/// Requires `r > ell / 2`.
pub fn minor_cap_area(r: f64, ell: f64) -> f64 {
    debug_assert!(r > ell / 2.0);
    r * r * (ell / (2.0 * r)).asin() - (ell / 2.0) * (r * r - ell * ell / 4.0).sqrt()
}

/// Angle configuration of the two witness triangles at the edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessCase {
    /// Both witness angles obtuse: both circle centers lie across the edge
    /// from their witness, and each circle meets the witness side in its
    /// minor cap.
    BothObtuse,
    /// Left witness angle acute, right obtuse: both centers lie on the left,
    /// with `r_t > r_w`.
    WAcuteTObtuse,
}

/// The lune areas for witness circles of radii `r_w` (left) and `r_t` (right)
/// over an edge of length `ell`.
#[derive(Debug, Clone, Copy)]
pub struct LuneGeometry {
    pub ell: f64,
    pub r_w: f64,
    pub r_t: f64,
    pub case: WitnessCase,
}

impl LuneGeometry {
    pub fn new(ell: f64, r_w: f64, r_t: f64, case: WitnessCase) -> LuneGeometry {
        assert!(r_w > ell / 2.0 && r_t > ell / 2.0, "radii must exceed ell/2");
        if case == WitnessCase::WAcuteTObtuse {
            assert!(r_t > r_w, "the mixed case requires r_t > r_w");
        }
        LuneGeometry { ell, r_w, r_t, case }
    }

    /// Lens half on the witness side of the left circle.
    pub fn area_a_w(&self) -> f64 {
        match self.case {
            WitnessCase::BothObtuse => minor_cap_area(self.r_w, self.ell),
            // center on the witness side: the left part is the major cap
            WitnessCase::WAcuteTObtuse => {
                PI * self.r_w * self.r_w - minor_cap_area(self.r_w, self.ell)
            }
        }
    }

    /// Lens half on the right side of the right circle.
    pub fn area_a_t(&self) -> f64 {
        minor_cap_area(self.r_t, self.ell)
    }

    /// Crescent of the right circle on the left side, minus `A_w`.
    pub fn area_b_t(&self) -> f64 {
        let major_t = PI * self.r_t * self.r_t - minor_cap_area(self.r_t, self.ell);
        major_t - self.area_a_w()
    }

    /// Crescent of the left circle on the right side, minus `A_t`.
    pub fn area_b_w(&self) -> f64 {
        match self.case {
            WitnessCase::BothObtuse => {
                PI * self.r_w * self.r_w
                    - minor_cap_area(self.r_w, self.ell)
                    - minor_cap_area(self.r_t, self.ell)
            }
            WitnessCase::WAcuteTObtuse => {
                minor_cap_area(self.r_w, self.ell) - minor_cap_area(self.r_t, self.ell)
            }
        }
    }

    /// Total area that must be empty of points for the event: the union of the
    /// two witness disks in the obtuse-obtuse case, and the left major cap of
    /// the right circle plus the right minor cap of the left circle otherwise.
    pub fn empty_area(&self) -> f64 {
        let m_w = minor_cap_area(self.r_w, self.ell);
        let m_t = minor_cap_area(self.r_t, self.ell);
        match self.case {
            WitnessCase::BothObtuse => {
                PI * (self.r_w * self.r_w + self.r_t * self.r_t) - m_w - m_t
            }
            WitnessCase::WAcuteTObtuse => PI * self.r_t * self.r_t - m_t + m_w,
        }
    }
}
