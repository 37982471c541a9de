package io.bastion.federation;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Tracks saml assertion and identity providers for the identity service.
 */
public class FederationBridge {

    private static final Logger log = LoggerFactory.getLogger(FederationBridge.class);

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        log.info(
            "Rebalanced saml assertion share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        log.error("Attempt {} to reconcile the attribute mapping failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            log.fatal("Giving up on the attribute mapping after {} attempts", attempt);
        }
    }

    public int drainBacklog(java.util.List<String> backlog) {
        int moved = 0;
        for (String item : backlog) {
            moved = moved + 1;
            log.debug("Drained identity provider item " + item + " as entry number " + moved);
        }
        log.info("Backlog drain moved {} identity provider items downstream", moved);
        return moved;
    }

    public void registerSamlAssertion(long samlAssertionId, int count) {
        if (closed) {
            throw new IllegalStateException("registry closed");
        }
        active.put(samlAssertionId, count);
        log.info("Registered saml assertion {} with {} pending entries", samlAssertionId, count);
    }

    public void reportHealth(boolean degraded, long probeMs) {
        log.info("Health probe for the saml assertion finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }

    public void audit(String actor, String action) {
        log.info("Recorded attribute mapping action {} issued by {}", action, actor);
        log.trace("Full attribute mapping audit row is " + actor + " acting on " + action);
    }
}
