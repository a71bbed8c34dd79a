//! Extremal functions: exact Taylor coefficients of the petal extremal,
//! point values from the integral representation, and sharpness witnesses.

use num_rational::BigRational;
use petal_radius::extremal::{
    build_integral_rep, f0_coefficients, sharpness_witness, table1_generators, ClosedForm,
    FunctionSpec, GeneratorSpec,
};
use petal_radius::kernel::ComplexValue;
use petal_radius::radii::{named_class_radius, NamedClass};

fn main() -> petal_radius::Result<()> {
    let exact = f0_coefficients::<BigRational>(10)?;
    let shown: Vec<String> = exact.coeffs()[1..].iter().map(|c| c.to_string()).collect();
    println!("f0 = z exp(∫ asinh t / t dt): {}", shown.join(", "));

    let f0 = build_integral_rep(GeneratorSpec::Petal)?;
    let series = f0_coefficients::<f64>(64)?;
    let z = ComplexValue::new(0.3, 0.2);
    println!("f0({z}) by quadrature {:.15}", f0.evaluate(z)?);
    println!("f0({z}) by series     {:.15}", series.eval(z));

    let forms = [
        ClosedForm::Table1F1,
        ClosedForm::Table1F2,
        ClosedForm::Table1F3,
    ];
    for (q, id) in table1_generators().into_iter().zip(forms) {
        let rep = build_integral_rep(q)?.evaluate(z)?;
        let closed = FunctionSpec::closed(id).evaluate(z)?;
        println!(
            "{id:?}: |integral rep - closed form| = {:.1e}",
            (rep - closed).norm()
        );
    }

    let result = named_class_radius(NamedClass::Cardioid)?;
    let w = sharpness_witness(&result)?;
    println!(
        "cardioid radius {:.9}: zf'/f at {} is {} (expected {}), residual {:.1e}",
        result.value,
        w.z_star,
        w.function.log_derivative(w.z_star)?,
        w.expected_w,
        w.residual()?
    );
    Ok(())
}
