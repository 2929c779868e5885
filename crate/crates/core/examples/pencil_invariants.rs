//! Minors, the polynomial S and the exact identities over Q.

use momentforge::pencil::{families, invariants};
use momentforge::polyalg::rational_irreducible_factor_count;

fn main() {
    let pencil = families::bias_minus_five();
    let inv = invariants(&pencil);
    println!("pencil    {pencil}");
    println!("mu23      {}", inv.mu(2, 3));
    println!("d         {}", inv.d);
    println!("Res(P,Q)  {}", inv.resultant);
    println!("S         {}", inv.s);
    println!("factors   {}", rational_irreducible_factor_count(&inv.s).unwrap());
    println!("Res(S~,T) = -mu23^3 Res(P,Q)^2: {:?}", inv.resultant_identity_holds());
    println!("conic discriminant = -16 mu23 Res(P,Q): {}", inv.conic_identity_holds());
    println!("S from the diagonal matches the closed form: {}", inv.s_forms_agree());
}
