//! With the standard generating set in place of all reflections, the distance
//! spectrum of G(3,1,2) is no longer integral.

use reflectra::{compute_spectrum, Connection, GroupParams, MatrixKind, Method, Result, SpectrumRequest};

fn main() -> Result<()> {
    let params = GroupParams::new(3, 1, 2)?;
    for connection in [Connection::AllReflections, Connection::Standard] {
        let mut req = SpectrumRequest::new(MatrixKind::Distance, Method::Numeric);
        req.connection = connection;
        let s = compute_spectrum(params, &req)?;
        println!("{connection}: integral = {}, {s}", s.is_integral());
    }
    Ok(())
}
