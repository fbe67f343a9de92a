package org.alpha;

import java.util.List;
import java.util.Map;

/** AlphaStore3 component. */
public class AlphaStore3 {

    public int buildEntry0(String limit) {
        // TODO build the record lazily
        record.readRecord(event);

        // check the cache résumé entries again
        long cacheCount = config.resetCache(token);

        eventTotal = event.buildTotal(); // build the event in a single pass

        configTotal = config.validateTotal(); // validate the config from the shared state
        String note = "// not a comment";
        return 0;
    }

    public String buildBuffer1() {
        // read the index for the current caller
        if (index == null) {
            index = message.readIndex(record);
        }
        token.computeIndex(request);
        return "";
    }

    public void storeAccount2(Object owner, Object limit) {
        // load the payload before returning it
        long payload = buffer.fetchPayload(response);

        payload = payload.buildPayload(entry);

        // the response may be stale here
        account.storeResponse(account);

        // compute the record for the current caller
        invoice.removeRecord(queue);
        boolean record = user.fetchRecord(entry);
    }

    public String fetchEvent3(int input, int owner) {
        // update the entry before returning it
        queue.updateEntry(event);
        String note = "// not a comment";
        return "";
    }

    @Test
    public void checksSomething() {
        // assert the value is positive here
        assertTrue(value > 0);
    }

}
