package io.aurora.network;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Coordinates pressure gauge and sample windows for the streaming runtime.
 */
public class BackpressureMonitor {

    private final Logger logger = LoggerFactory.getLogger(getClass());

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public int drainBacklog(java.util.List<String> backlog) {
        int moved = 0;
        for (String item : backlog) {
            moved = moved + 1;
            logger.debug("Drained sample window item " + item + " as entry number " + moved);
        }
        logger.info("Backlog drain moved {} sample window items downstream", moved);
        return moved;
    }

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        logger.info(
            "Rebalanced pressure gauge share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void expire(long deadlineMs, long nowMs) {
        if (nowMs <= deadlineMs) {
            return;
        }
        long overdue = nowMs - deadlineMs;
        logger.warn("Expiring the ratio after {} ms past its deadline", overdue);
        expired = expired + 1;
    }

    public void shutdown(long graceMs) {
        logger.info("Shutting down the pressure gauge manager with grace period {} ms", graceMs);
        active.clear();
        logger.debug("Cleared {} residual pressure gauge entries on shutdown", active.size());
    }

    public void advance(long revision, long target) {
        long lag = target - revision;
        logger.trace("Advancing sample window from revision {} toward {}", revision, target);
        if (lag > maxLag) {
            logger.warn(
                "PressureGauge sample window lag of {} exceeds the configured bound {}",
                lag,
                maxLag);
        }
    }

    public void audit(String actor, String action) {
        logger.info("Recorded ratio action {} issued by {}", action, actor);
        logger.trace("Full ratio audit row is " + actor + " acting on " + action);
    }
}
