pub mod coeffs;
pub mod eval;
pub mod sweep;
pub mod table1;

use crate::args::PointArgs;
use lerch::LerchPoint;

pub(crate) fn point(p: &PointArgs) -> lerch::Result<LerchPoint> {
    LerchPoint::with_side(p.z, p.s, p.a, p.cut_side.into())
}
