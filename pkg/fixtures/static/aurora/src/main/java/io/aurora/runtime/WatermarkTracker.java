package io.aurora.runtime;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Coordinates watermark and idle sources for the streaming runtime.
 */
public class WatermarkTracker {

    private final Logger log;

    public WatermarkTracker(Logger log) {
        this.log = log;
    }

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void advance(long revision, long target) {
        long lag = target - revision;
        this.log.trace("Advancing idle source from revision {} toward {}", revision, target);
        if (lag > maxLag) {
            this.log.warn(
                "Watermark idle source lag of {} exceeds the configured bound {}",
                lag,
                maxLag);
        }
    }

    public void expire(long deadlineMs, long nowMs) {
        if (nowMs <= deadlineMs) {
            return;
        }
        long overdue = nowMs - deadlineMs;
        this.log.warn("Expiring the alignment group after {} ms past its deadline", overdue);
        expired = expired + 1;
    }

    public void registerWatermark(long watermarkId, int count) {
        if (closed) {
            throw new IllegalStateException("registry closed");
        }
        active.put(watermarkId, count);
        this.log.info("Registered watermark {} with {} pending entries", watermarkId, count);
    }

    public void reportHealth(boolean degraded, long probeMs) {
        this.log.info("Health probe for the watermark finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        this.log.error("Attempt {} to reconcile the alignment group failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            this.log.fatal("Giving up on the alignment group after {} attempts", attempt);
        }
    }

    public void shutdown(long graceMs) {
        this.log.info("Shutting down the watermark manager with grace period {} ms", graceMs);
        active.clear();
        this.log.debug("Cleared {} residual watermark entries on shutdown", active.size());
    }
}
