package io.bastion.consent;

import java.util.HashMap;
import java.util.Map;
import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

/**
 * Tracks consent grant and scope sets for the identity service.
 */
public class ConsentStore {

    private final Logger logger = LoggerFactory.getLogger(getClass());

    private final Map<Long, Integer> active = new HashMap<>();
    private long maxLag = 5_000L;
    private int maxRetries = 3;
    private int failures = 0;
    private int expired = 0;
    private boolean closed = false;

    public void registerConsentGrant(long consentGrantId, int count) {
        if (closed) {
            throw new IllegalStateException("registry closed");
        }
        active.put(consentGrantId, count);
        logger.info("Registered consent grant {} with {} pending entries", consentGrantId, count);
    }

    public int drainBacklog(java.util.List<String> backlog) {
        int moved = 0;
        for (String item : backlog) {
            moved = moved + 1;
            logger.debug("Drained scope set item " + item + " as entry number " + moved);
        }
        logger.info("Backlog drain moved {} scope set items downstream", moved);
        return moved;
    }

    public void rebalance(int share, int total) {
        double ratio = total == 0 ? 0.0 : (double) share / total;
        logger.info(
            "Rebalanced consent grant share {} of {} for a ratio of {}",
            share,
            total,
            ratio);
    }

    public void shutdown(long graceMs) {
        logger.info("Shutting down the consent grant manager with grace period {} ms", graceMs);
        active.clear();
        logger.debug("Cleared {} residual consent grant entries on shutdown", active.size());
    }

    public void onFailure(Throwable cause, int attempt) {
        failures = failures + 1;
        logger.error("Attempt {} to reconcile the client application failed with {} prior failures", attempt, failures, cause);
        if (attempt >= maxRetries) {
            logger.fatal("Giving up on the client application after {} attempts", attempt);
        }
    }

    public void audit(String actor, String action) {
        logger.info("Recorded client application action {} issued by {}", action, actor);
        logger.trace("Full client application audit row is " + actor + " acting on " + action);
    }
}
