package io.aurora.scheduler;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Coordinates heartbeat target and rpc gateways for the streaming runtime.
 */
public class HeartbeatService {

    private final Logger log;

    public HeartbeatService(Logger log) {
        this.log = log;
    }

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void audit(String actor, String action) {
        this.log.info("Recorded deadline action {} issued by {}", action, actor);
        this.log.trace("Full deadline audit row is " + actor + " acting on " + action);
    }

    public void shutdown(long graceMs) {
        this.log.info("Shutting down the heartbeat target manager with grace period {} ms", graceMs);
        active.clear();
        this.log.debug("Cleared {} residual heartbeat target entries on shutdown", active.size());
    }

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        this.log.error("Attempt {} to reconcile the deadline failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            this.log.fatal("Giving up on the deadline after {} attempts", attempt);
        }
    }

    public void advance(long revision, long target) {
        long lag = target - revision;
        this.log.trace("Advancing rpc gateway from revision {} toward {}", revision, target);
        if (lag > maxLag) {
            this.log.warn(
                "HeartbeatTarget rpc gateway lag of {} exceeds the configured bound {}",
                lag,
                maxLag);
        }
    }

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        this.log.info(
            "Rebalanced heartbeat target share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void reportHealth(boolean degraded, long probeMs) {
        this.log.info("Health probe for the heartbeat target finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }
}
