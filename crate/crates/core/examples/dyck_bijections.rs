//! Parking functions as labeled Dyck paths, and the S_n action seen on the
//! labels.

use catalan_burnside::bijections::{
    act_on_labeled_dyck, dyck_to_triangulation, ipf_to_dyck, outcome_map, pf_to_labeled_dyck,
};
use catalan_burnside::{IncreasingParkingFunction, ParkingFunction, Permutation};

fn main() {
    let u: IncreasingParkingFunction = "1,1,3,4,4".parse().unwrap();
    let d = ipf_to_dyck(&u);
    println!("{u}  ->  {d}");
    println!("triangulation of the 7-gon: {}", dyck_to_triangulation(&d).unwrap());

    let x: ParkingFunction = "4,1,3,4,1".parse().unwrap();
    let ld = pf_to_labeled_dyck(&x);
    println!("\n{x}  ->  {ld}");
    println!("outcome map {}", outcome_map(&x));

    let sigma = Permutation::from_cycles(5, &[&[1, 5, 3], &[2, 4]]).unwrap();
    let moved = x.act(&sigma);
    println!("\nsigma = {sigma} (one-line)");
    println!("sigma x = {moved}");
    println!("F(sigma x)   = {}", pf_to_labeled_dyck(&moved));
    println!("sigma . F(x) = {}", act_on_labeled_dyck(&sigma, &ld).unwrap());
}
