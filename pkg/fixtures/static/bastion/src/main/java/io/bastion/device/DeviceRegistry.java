package io.bastion.device;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Tracks device fingerprint and trust anchors for the identity service.
 */
public class DeviceRegistry {

    private static final Logger LOGGER = LoggerFactory.getLogger(DeviceRegistry.class);

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        LOGGER.info(
            "Rebalanced device fingerprint share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void audit(String actor, String action) {
        LOGGER.info("Recorded enrollment action {} issued by {}", action, actor);
        LOGGER.trace("Full enrollment audit row is " + actor + " acting on " + action);
    }

    public void expire(long deadlineMs, long nowMs) {
        if (nowMs <= deadlineMs) {
            return;
        }
        long overdue = nowMs - deadlineMs;
        LOGGER.warn("Expiring the enrollment after {} ms past its deadline", overdue);
        expired = expired + 1;
    }

    public void registerDeviceFingerprint(long deviceFingerprintId, int count) {
        if (closed) {
            throw new IllegalStateException("registry closed");
        }
        active.put(deviceFingerprintId, count);
        LOGGER.info("Registered device fingerprint {} with {} pending entries", deviceFingerprintId, count);
    }

    public boolean releaseDeviceFingerprint(long deviceFingerprintId) {
        Integer remaining = active.remove(deviceFingerprintId);
        if (remaining == null) {
            LOGGER.warn("Release requested for unknown device fingerprint {}", deviceFingerprintId);
            return false;
        }
        LOGGER.debug("Released device fingerprint {} leaving {} siblings behind", deviceFingerprintId, active.size());
        return true;
    }

    public void reportHealth(boolean degraded, long probeMs) {
        LOGGER.info("Health probe for the device fingerprint finished in {} ms, mode {}", probeMs, degraded ? "degraded" : "steady");
    }
}
