public class CalcTest {
    // a test satisfying traditional criteria like line coverage
    void test1() { assert 7 == or(4, 3); }
    // a more readable test
    void test2() { assert 0b111 == or(0b100, 0b011); }
}
