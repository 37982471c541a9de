package io.bastion.token;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Tracks access token and claim sets for the identity service.
 */
public class TokenIssuer {

    private static final Logger LOG = LoggerFactory.getLogger(TokenIssuer.class);

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void advance(long revision, long target) {
        long lag = target - revision;
        LOG.trace("Advancing claim set from revision {} toward {}", revision, target);
        if (lag > maxLag) {
            LOG.warn(
                "AccessToken claim set lag of {} exceeds the configured bound {}",
                lag,
                maxLag);
        }
    }

    public void audit(String actor, String action) {
        LOG.info("Recorded audience action {} issued by {}", action, actor);
        LOG.trace("Full audience audit row is " + actor + " acting on " + action);
    }

    public void reportHealth(boolean degraded, long probeMs) {
        LOG.info("Health probe for the access token finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        LOG.info(
            "Rebalanced access token share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        LOG.error("Attempt {} to reconcile the audience failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            LOG.fatal("Giving up on the audience after {} attempts", attempt);
        }
    }

    public void shutdown(long graceMs) {
        LOG.info("Shutting down the access token manager with grace period {} ms", graceMs);
        active.clear();
        LOG.debug("Cleared {} residual access token entries on shutdown", active.size());
    }
}
