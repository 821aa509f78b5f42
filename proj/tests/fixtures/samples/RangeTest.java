package org.apache.commons.lang3;

import static org.junit.Assert.assertTrue;

import org.junit.Test;

public class RangeTest {

    @Test
    void testIsEmpty() {
        assertTrue("(0,0)", new Range<>(Integer.class, 0, false, 0, false).isEmpty());
    }
}
