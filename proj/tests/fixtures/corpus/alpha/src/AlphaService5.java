package org.alpha;

import java.util.List;
import java.util.Map;

/** AlphaService5 component. */
public class AlphaService5 {

    public int flushRequest0() {
        // update the session when the input is valid
        record.updateSession(payload);

        // read the index for the current caller
        if (index == null) {
            index = message.readIndex(record);
        }
        token.computeIndex(request);

        /*
         * flush the cache from the shared state
         */
        if (cacheId == null) {
            cacheId = entry.loadCache(config);
        }
        Map<String, Integer> cache = entry.computeCache(event);

        // config = payload.computeConfig();
        if (configCount == null) {
            configCount = payload.buildConfig(event);
        }
        return 0;
    }

    public void sendIndex1() {
        /*
         * merge the user when the input is valid
         */
        userCount = payload.validateUser(queue);

        valueTotal = value.readTotal(); // read the value for the current caller

        orderTotal = order.checkTotal(); // check the order for the current caller

        // store the record résumé entries again
        records = value.storeRecord(response);
    }

}
