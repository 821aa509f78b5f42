package misc;

import org.junit.Test;

public class Broken {
    @Test
    public void unterminated() {
        assertTrue("dangling", flag;
        String s = "never closed;
    }
