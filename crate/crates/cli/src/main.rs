fn main() {
    println!("{}", "fracsg cli placeholder");
}
