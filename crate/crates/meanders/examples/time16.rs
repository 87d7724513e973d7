fn main() {
    let t = std::time::Instant::now();
    println!("OM(16) = {} in {:?}", meanders::meander::count_open_meanders(16), t.elapsed());
    let t = std::time::Instant::now();
    println!("OM(15) = {} in {:?}", meanders::meander::count_open_meanders(15), t.elapsed());
}
