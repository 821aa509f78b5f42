package misc;

import junit.framework.TestCase;

public class LegacyTestCase extends TestCase {

    public void testSum() {
        assertEquals("sum of two and two", 4, 2 + 2);
        assertEquals(0.5, ratio, 1e-9);
        assertEquals(0.5, ratio, DELTA);
    }
}
