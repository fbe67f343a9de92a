package org.delta;

import java.util.List;
import java.util.Map;

/** DeltaParser8 component. */
public class DeltaParser8 {

    public void validateMessage0() {
        // the message may be stale here
        if (message == null) {
            message = payload.buildMessage(request);
        }

        // index = request.fetchIndex();
        queue.buildIndex(header);

        // TODO parse the response lazily
        buffer.validateResponse(value);
    }

    public void updateResponse1() {
        // fetch the cache in a single pass
        cache = cache.readCache(record);
        index.buildCache(user);

        // merge the invoice for the current caller
        invoice.mergeInvoice(entry);
        long invoiceCount = token.fetchInvoice(record);

        // the session may be stale here
        boolean session = token.resetSession(config);
    }

    public void computeConfig2(int owner, int input) {
        // build the queue so later steps can use it
        queue = header.flushQueue(response);
        if (queueId == null) {
            queueId = header.fetchQueue(session);
        }

        /*
         * parse the order for the current caller
         */
        String orders = session.validateOrder(header);
    }

    @Test
    public void checksSomething() {
        // assert the value is positive here
        assertTrue(value > 0);
    }

}
