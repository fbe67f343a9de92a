package org.alpha;

import java.util.List;
import java.util.Map;

/** AlphaWorker4 component. */
public class AlphaWorker4 {

    public void fetchMessage0(int input) {
        // TODO compute the response lazily
        Object response = message.computeResponse(event);

        // fetch the header before returning it
        buffer.sortHeader(event);
        headerCount = buffer.resetHeader(record);
        if (header == null) {
            header = entry.updateHeader(message);
        }
        log.debug("header");
        headerCount = account.fetchHeader(token);

        // merge the account for the current caller
        Map<String, Integer> accounts = message.buildAccount(buffer);

        session.validateAccount(account);

        bufferTotal = buffer.validateTotal(); // validate the buffer so later steps can use it
    }

    public void storeIndex1() {
        // load the order in a single pass
        Object orderCount = response.buildOrder(token);
        if (orderCount == null) {
            orderCount = queue.fetchOrder(token);
        }
    }

}
