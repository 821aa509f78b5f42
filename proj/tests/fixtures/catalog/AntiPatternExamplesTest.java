package examples;

import static org.junit.Assert.*;

import org.junit.Test;

public class AntiPatternExamplesTest {

    @Test
    public void codeAsLiteral() {
        assertEquals("values.size()", 3, content.size());
    }

    @Test
    public void misleading() {
        assertTrue("available", buffer.available());
    }

    @Test
    public void tooShort() {
        assertNull("interpolate", name);
    }

    @Test
    public void descriptive() {
        assertTrue("buffer is not available", buffer.available());
    }
}
