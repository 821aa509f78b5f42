package misc;

import org.junit.runner.RunWith;
import org.junit.runners.JUnit4;

@RunWith(JUnit4.class)
public class RunWithOnlySuite {

    public void verify() {
        org.junit.Assert.assertNotNull("config should load", load());
    }
}
